#pragma once

#include <optional>

#include "picod/gflin.hpp"
#include "picod/instance.hpp"

namespace picod {

// An l x m coefficient matrix over F_q; row k holds the coefficients of
// transmission k.
struct LinearScheme {
  Matrix A;

  int q() const { return A.q; }
  int length() const { return A.rows; }
  int messages() const { return A.cols; }

  bool operator==(const LinearScheme&) const = default;
};

// Validates: l >= 1, entries in [0, q), no all-zero row.
LinearScheme make_scheme(int q, const std::vector<std::vector<int>>& rows);

// True iff client i can recover message j (in R_i): after subtracting the
// known side-information contribution, e_j restricted to R_i must lie in the
// row space of A restricted to R_i.
bool message_decodable(const PicodInstance&, int i, const LinearScheme&, int j);

// Smallest decodable j in R_i, if any.
std::optional<int> client_satisfied(const PicodInstance&, int i, const LinearScheme&);

struct SatisfactionReport {
  std::vector<std::optional<int>> witness;  // entry i-1: decoded message of client i
  int satisfied = 0;
  bool all_satisfied = false;
};

SatisfactionReport validate_scheme(const PicodInstance&, const LinearScheme&);

// Clients first satisfied by the length-k prefix, for each k (1-based rows).
std::vector<std::vector<int>> newly_satisfied_per_row(const PicodInstance&, const LinearScheme&);

// Support T with |T \ S_i| = 1 for every client; the single transmission
// sum_{j in T} b_j then satisfies everyone (over any field, so no q argument).
// Returns the smallest feasible T in mask order, or nothing.
std::optional<MsgSet> one_shot_feasible(const PicodInstance&, const Budgets& = {});

// One transmission summing the messages of the given support.
LinearScheme scheme_from_support(const PicodInstance&, MsgSet support, int q = 2);

// Achievability heuristic: repeatedly appends the candidate row satisfying the
// most new clients (ties: smallest support, then lexicographically smallest).
LinearScheme greedy_scheme(const PicodInstance&, int q = 2, const Budgets& = {});

}  // namespace picod
