#include "picod/schemes.hpp"

#include <algorithm>

namespace picod {

LinearScheme make_scheme(int q, const std::vector<std::vector<int>>& rows) {
  if (!supported_field(q)) throw std::invalid_argument("unsupported field F_" + std::to_string(q));
  if (rows.empty()) throw std::invalid_argument("a scheme needs at least one transmission");
  const size_t cols = rows.front().size();
  if (cols == 0) throw std::invalid_argument("transmissions must have at least one coefficient");
  Matrix A(static_cast<int>(rows.size()), static_cast<int>(cols), q);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("transmission rows have inconsistent lengths");
    bool nonzero = false;
    for (size_t c = 0; c < cols; ++c) {
      const int v = rows[r][c];
      if (v < 0 || v >= q) throw std::invalid_argument("coefficient out of range for F_" + std::to_string(q));
      A.at(static_cast<int>(r), static_cast<int>(c)) = static_cast<std::uint8_t>(v);
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) throw std::invalid_argument("transmission " + std::to_string(r + 1) + " is all-zero");
  }
  return LinearScheme{std::move(A)};
}

namespace {

void check_dims(const PicodInstance& inst, const LinearScheme& s) {
  if (s.messages() != inst.m)
    throw std::invalid_argument("scheme has " + std::to_string(s.messages()) + " columns but the instance has " +
                                std::to_string(inst.m) + " messages");
}

// RREF of the scheme matrix restricted to the request-set columns of a client.
Matrix restricted_rref(const LinearScheme& s, const std::vector<int>& cols) {
  Matrix sub(s.length(), static_cast<int>(cols.size()), s.q());
  for (int r = 0; r < s.length(); ++r)
    for (size_t k = 0; k < cols.size(); ++k) sub.at(r, static_cast<int>(k)) = s.A.at(r, cols[k] - 1);
  return rref(std::move(sub));
}

bool unit_in_rref(const Matrix& R, size_t pos) {
  std::vector<std::uint8_t> e(static_cast<size_t>(R.cols), 0);
  e[pos] = 1;
  return reduces_to_zero(R, e);
}

}  // namespace

bool message_decodable(const PicodInstance& inst, int i, const LinearScheme& s, int j) {
  check_dims(inst, s);
  const MsgSet req = inst.request_mask(i);
  if (j < 1 || j > inst.m || !has_msg(req, j))
    throw std::invalid_argument("message " + std::to_string(j) + " is not in the request set of client " +
                                std::to_string(i));
  const auto cols = set_elements(req);
  const Matrix R = restricted_rref(s, cols);
  const auto it = std::find(cols.begin(), cols.end(), j);
  return unit_in_rref(R, static_cast<size_t>(it - cols.begin()));
}

std::optional<int> client_satisfied(const PicodInstance& inst, int i, const LinearScheme& s) {
  check_dims(inst, s);
  const auto cols = set_elements(inst.request_mask(i));
  const Matrix R = restricted_rref(s, cols);
  for (size_t k = 0; k < cols.size(); ++k)
    if (unit_in_rref(R, k)) return cols[k];
  return std::nullopt;
}

SatisfactionReport validate_scheme(const PicodInstance& inst, const LinearScheme& s) {
  SatisfactionReport rep;
  rep.witness.resize(static_cast<size_t>(inst.n()));
  for (int i = 1; i <= inst.n(); ++i) {
    rep.witness[static_cast<size_t>(i - 1)] = client_satisfied(inst, i, s);
    if (rep.witness[static_cast<size_t>(i - 1)]) ++rep.satisfied;
  }
  rep.all_satisfied = rep.satisfied == inst.n();
  return rep;
}

std::vector<std::vector<int>> newly_satisfied_per_row(const PicodInstance& inst, const LinearScheme& s) {
  check_dims(inst, s);
  std::vector<std::vector<int>> out(static_cast<size_t>(s.length()));
  std::vector<bool> done(static_cast<size_t>(inst.n()), false);
  for (int k = 1; k <= s.length(); ++k) {
    Matrix prefix(k, s.messages(), s.q());
    std::copy_n(s.A.a.begin(), static_cast<size_t>(k) * static_cast<size_t>(s.messages()), prefix.a.begin());
    const LinearScheme p{std::move(prefix)};
    for (int i = 1; i <= inst.n(); ++i) {
      if (done[static_cast<size_t>(i - 1)]) continue;
      if (client_satisfied(inst, i, p)) {
        done[static_cast<size_t>(i - 1)] = true;
        out[static_cast<size_t>(k - 1)].push_back(i);
      }
    }
  }
  return out;
}

std::optional<MsgSet> one_shot_feasible(const PicodInstance& inst, const Budgets& budgets) {
  if (inst.m > budgets.max_m_exponential)
    throw BudgetExceeded("one-shot support enumeration needs 2^" + std::to_string(inst.m) + " candidates");
  for (MsgSet t = 1; t <= inst.universe(); ++t) {
    bool ok = true;
    for (int i = 1; i <= inst.n() && ok; ++i) ok = set_size(t & inst.request_mask(i)) == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

LinearScheme scheme_from_support(const PicodInstance& inst, MsgSet support, int q) {
  if (support == 0 || (support & ~inst.universe()))
    throw std::invalid_argument("support must be a non-empty subset of the message set");
  std::vector<int> row(static_cast<size_t>(inst.m), 0);
  for (int j : set_elements(support)) row[static_cast<size_t>(j - 1)] = 1;
  return make_scheme(q, {row});
}

namespace {

// Candidate pool for the greedy builder: all non-zero vectors for q = 2,
// projective representatives (first non-zero entry = 1) otherwise.
std::vector<std::vector<std::uint8_t>> candidate_rows(int m, int q) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> v(static_cast<size_t>(m), 0);
  while (true) {
    int k = m - 1;
    while (k >= 0 && v[static_cast<size_t>(k)] == q - 1) v[static_cast<size_t>(k--)] = 0;
    if (k < 0) break;
    ++v[static_cast<size_t>(k)];
    const auto first = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    if (q == 2 || (first != v.end() && *first == 1)) out.push_back(v);
  }
  return out;
}

int support_size(const std::vector<std::uint8_t>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; }));
}

}  // namespace

LinearScheme greedy_scheme(const PicodInstance& inst, int q, const Budgets& budgets) {
  if (!supported_field(q)) throw std::invalid_argument("unsupported field F_" + std::to_string(q));
  if (inst.m > budgets.max_m_exponential)
    throw BudgetExceeded("greedy candidate pool needs " + std::to_string(q) + "^" + std::to_string(inst.m) +
                         " vectors");
  const auto pool = candidate_rows(inst.m, q);

  Matrix A(0, inst.m, q);
  std::vector<bool> satisfied(static_cast<size_t>(inst.n()), false);
  int remaining = inst.n();

  while (remaining > 0) {
    const std::vector<std::uint8_t>* best = nullptr;
    int best_score = 0;
    std::vector<int> best_new;
    for (const auto& cand : pool) {
      Matrix trial(A.rows + 1, inst.m, q);
      std::copy(A.a.begin(), A.a.end(), trial.a.begin());
      std::copy(cand.begin(), cand.end(), trial.a.begin() + A.a.size());
      const LinearScheme t{std::move(trial)};
      std::vector<int> gained;
      for (int i = 1; i <= inst.n(); ++i)
        if (!satisfied[static_cast<size_t>(i - 1)] && client_satisfied(inst, i, t)) gained.push_back(i);
      const int score = static_cast<int>(gained.size());
      bool better = score > best_score;
      if (score == best_score && best != nullptr && score > 0) {
        const int ss = support_size(cand), bs = support_size(*best);
        better = ss < bs || (ss == bs && cand < *best);
      }
      if (better) {
        best = &cand;
        best_score = score;
        best_new = std::move(gained);
      }
    }
    // a unit vector for any requested message always satisfies its client
    if (best == nullptr || best_score == 0) throw std::logic_error("greedy round made no progress");

    Matrix grown(A.rows + 1, inst.m, q);
    std::copy(A.a.begin(), A.a.end(), grown.a.begin());
    std::copy(best->begin(), best->end(), grown.a.begin() + A.a.size());
    A = std::move(grown);
    for (int i : best_new) satisfied[static_cast<size_t>(i - 1)] = true;
    remaining -= best_score;
  }
  return LinearScheme{std::move(A)};
}

}  // namespace picod
