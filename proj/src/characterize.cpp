#include "picod/characterize.hpp"

#include <algorithm>

#include "picod/exact.hpp"

namespace picod {

const char* small_case_name(SmallCase c) {
  switch (c) {
    case SmallCase::TwoOrFewer: return "n<=2";
    case SmallCase::Case1: return "3-1";
    case SmallCase::Case2a: return "3-2a";
    case SmallCase::Case2b: return "3-2b";
    case SmallCase::Case4: return "3-4";
    case SmallCase::Case5: return "3-5";
  }
  return "?";
}

namespace {

int min_elem(MsgSet s) { return set_elements(s).front(); }

// One transmission satisfying two clients: a sum across the symmetric
// difference when neither set contains the other, else a message missing from
// the larger set.
std::vector<int> two_client_row(const PicodInstance& inst, int i, int j) {
  const MsgSet si = inst.side_info(i), sj = inst.side_info(j);
  std::vector<int> row(static_cast<size_t>(inst.m), 0);
  if ((si & ~sj) != 0 && (sj & ~si) != 0) {
    row[static_cast<size_t>(min_elem(si & ~sj) - 1)] = 1;
    row[static_cast<size_t>(min_elem(sj & ~si) - 1)] = 1;
  } else {
    const MsgSet big = (si & ~sj) == 0 ? sj : si;
    row[static_cast<size_t>(min_elem(inst.universe() & ~big) - 1)] = 1;
  }
  return row;
}

std::vector<int> unit_row(const PicodInstance& inst, int msg) {
  std::vector<int> row(static_cast<size_t>(inst.m), 0);
  row[static_cast<size_t>(msg - 1)] = 1;
  return row;
}

}  // namespace

SmallCaseResult characterize_small(const PicodInstance& inst) {
  if (inst.n() > 3) throw std::invalid_argument("closed-form classification covers at most three clients");
  SmallCaseResult res;

  if (inst.n() <= 2) {
    res.label = SmallCase::TwoOrFewer;
    if (inst.n() == 1) {
      res.scheme = make_scheme(2, {unit_row(inst, min_elem(inst.request_mask(1)))});
    } else {
      res.scheme = make_scheme(2, {two_client_row(inst, 1, 2)});
    }
    return res;
  }

  const MsgSet s1 = inst.side_info(1), s2 = inst.side_info(2), s3 = inst.side_info(3);
  const MsgSet uni = s1 | s2 | s3;

  if (uni != inst.universe()) {
    res.label = SmallCase::Case1;
    res.scheme = make_scheme(2, {unit_row(inst, min_elem(inst.universe() & ~uni))});
    return res;
  }

  const int perms[3][3] = {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}};
  for (const auto& p : perms) {
    const MsgSet si = inst.side_info(p[0]), sj = inst.side_info(p[1]), sk = inst.side_info(p[2]);
    const MsgSet own = si & ~(sj | sk), shared = (sj & sk) & ~si;
    if (own != 0 && shared != 0) {
      res.label = SmallCase::Case2a;
      std::vector<int> row(static_cast<size_t>(inst.m), 0);
      row[static_cast<size_t>(min_elem(own) - 1)] = 1;
      row[static_cast<size_t>(min_elem(shared) - 1)] = 1;
      res.scheme = make_scheme(2, {row});
      return res;
    }
  }

  const MsgSet d1 = (s2 & s3) & ~s1, d2 = (s1 & s3) & ~s2, d3 = (s1 & s2) & ~s3;
  if (d1 != 0 && d2 != 0 && d3 != 0) {
    res.label = SmallCase::Case2b;
    std::vector<int> row(static_cast<size_t>(inst.m), 0);
    row[static_cast<size_t>(min_elem(d1) - 1)] = 1;
    row[static_cast<size_t>(min_elem(d2) - 1)] = 1;
    row[static_cast<size_t>(min_elem(d3) - 1)] = 1;
    res.scheme = make_scheme(2, {row});
    return res;
  }

  // A length-2 collection needs a client strictly inside both others; the
  // candidate levels are then forced and get validated directly.
  for (int i = 1; i <= 3; ++i) {
    const int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
    const MsgSet si = inst.side_info(i), sj = inst.side_info(j), sk = inst.side_info(k);
    if (si == sj || si == sk || (si & ~sj) != 0 || (si & ~sk) != 0) continue;
    NestedCollection nc{{{i}, {std::min(j, k), std::max(j, k)}}};
    if (!validate_nested_collection(inst, nc)) continue;
    res.label = SmallCase::Case4;
    res.beta = res.tau2 = res.tau1 = res.eta = 2;
    res.collection = std::move(nc);
    res.scheme = make_scheme(2, {two_client_row(inst, j, k), unit_row(inst, min_elem(inst.universe() & ~si))});
    return res;
  }

  // Residual: no one-transmission demand pattern and no length-2 collection.
  // Two transmissions—one for clients 2 and 3, one message missing from
  // client 1—always work here as no side-information set contains another.
  res.label = SmallCase::Case5;
  res.beta = res.tau2 = 2;
  res.tau1 = res.eta = 1;
  res.scheme = make_scheme(2, {two_client_row(inst, 2, 3), unit_row(inst, min_elem(inst.request_mask(1)))});
  return res;
}

CrosscheckReport crosscheck_small(int m_max, const Budgets& budgets) {
  CrosscheckReport report;
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= 3; ++n) {
      if (static_cast<std::uint64_t>(n) > full_set(m)) continue;
      for_each_instance(m, n, [&](const PicodInstance& inst) {
        CrosscheckEntry entry;
        entry.instance = inst;
        entry.predicted = characterize_small(inst);
        entry.eta = eta_exact(inst, budgets);
        entry.tau1 = tau1(inst, budgets).value;
        entry.tau2 = tau2(inst, budgets).value;
        entry.beta2 = exact_linear_beta(inst, 2, 0, budgets)->beta_lin;
        entry.beta3 = exact_linear_beta(inst, 3, 0, budgets)->beta_lin;
        entry.match = entry.predicted.eta == entry.eta && entry.predicted.tau1 == entry.tau1 &&
                      entry.predicted.tau2 == entry.tau2 && entry.predicted.beta == entry.beta2 &&
                      entry.predicted.beta == entry.beta3;
        ++report.instances_checked;
        if (!entry.match) ++report.mismatches;
        report.entries.push_back(std::move(entry));
      });
    }
  }
  return report;
}

}  // namespace picod
