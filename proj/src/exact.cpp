#include "picod/exact.hpp"

namespace picod {

std::optional<BetaSearch> exact_linear_beta(const PicodInstance& inst, int q, int l_max, const Budgets& budgets) {
  if (!supported_field(q)) throw std::invalid_argument("unsupported field F_" + std::to_string(q));
  if (inst.m > budgets.max_m_exponential)
    throw BudgetExceeded("exact search over " + std::to_string(inst.m) + " messages exceeds the m budget");
  const int lm = l_max > 0 ? std::min(l_max, inst.m) : inst.m;
  for (int l = 1; l <= lm; ++l) {
    SubspaceEnumerator en(inst.m, l, q, budgets.max_subspaces);
    std::optional<Matrix> best;
    while (auto M = en.next()) {
      const LinearScheme s{*M};
      if (!validate_scheme(inst, s).all_satisfied) continue;
      if (!best || M->a < best->a) best = std::move(M);
    }
    if (best) return BetaSearch{l, LinearScheme{std::move(*best)}};
  }
  return std::nullopt;
}

ExactResult certify(const PicodInstance& inst, int q, const BoundOptions& opt) {
  ExactResult res;
  res.q = q;
  res.bounds = bound_report(inst, opt);
  auto found = exact_linear_beta(inst, q, 0, opt.budgets);
  // l_max defaults to m and the identity matrix always satisfies everyone
  res.beta_lin = found->beta_lin;
  res.witness = std::move(found->witness);
  res.best_lower = res.bounds.best_lower;
  res.lower_used = res.bounds.best_name;
  res.certified = res.beta_lin == res.best_lower;
  return res;
}

}  // namespace picod
