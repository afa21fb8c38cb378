#pragma once

#include <optional>
#include <string>

#include "picod/bounds.hpp"
#include "picod/schemes.hpp"

namespace picod {

struct BetaSearch {
  int beta_lin = 0;
  LinearScheme witness;
};

// Smallest l such that some l-dimensional row space over F_q satisfies every
// client; searches canonical subspaces by increasing dimension, so no smaller
// dimension works. Two schemes with equal row spaces satisfy exactly the same
// clients, which makes the subspace search lossless. The witness is the
// lexicographically smallest valid canonical matrix at the answering l.
// l_max = 0 means m, where the identity always succeeds.
std::optional<BetaSearch> exact_linear_beta(const PicodInstance&, int q, int l_max = 0, const Budgets& = {});

struct ExactResult {
  int q = 2;
  int beta_lin = 0;
  LinearScheme witness;
  bool certified = false;  // beta_lin equals the best lower bound
  std::string lower_used;  // bound matching (or best known, when uncertified)
  int best_lower = 0;
  BoundReport bounds;
};

// Lower bounds plus exhaustive search; certified iff they meet.
ExactResult certify(const PicodInstance&, int q = 2, const BoundOptions& = {});

}  // namespace picod
