#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace picod {

// Messages are numbered 1..m; bit j-1 of a MsgSet marks message j.
using MsgSet = std::uint64_t;

inline constexpr int kMaxMessages = 63;

constexpr MsgSet msg_bit(int msg) { return MsgSet{1} << (msg - 1); }
constexpr bool has_msg(MsgSet s, int msg) { return (s >> (msg - 1)) & 1u; }
constexpr MsgSet full_set(int m) { return (MsgSet{1} << m) - 1; }
inline int set_size(MsgSet s) { return std::popcount(s); }

std::vector<int> set_elements(MsgSet s);
MsgSet set_of(std::initializer_list<int> elems);
std::string set_repr(MsgSet s);  // "{1,3,4}"; "{}" when empty

// Orders sets by size, then by ascending element sequence.
bool canonical_set_less(MsgSet a, MsgSet b);

// C(n, k); exact for n <= 63.
std::uint64_t binomial(int n, int k);

// Thrown when a search would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caps on the exponential searches. The CLI exposes these as --budget-* flags.
struct Budgets {
  int max_m_exponential = 20;  // 2^m subset DPs and candidate pools
  std::uint64_t max_demand_functions = 1'000'000;
  std::uint64_t max_subspaces = 10'000'000;
  int eta_exact_max_n = 10;
  int eta_exact_max_m = 6;
};

}  // namespace picod
