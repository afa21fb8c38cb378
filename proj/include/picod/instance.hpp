#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "picod/common.hpp"

namespace picod {

// A PICOD problem: m messages and an ordered list of distinct side-information
// sets, each a proper subset of {1..m}. Client indices are 1-based throughout,
// matching the usual S_1..S_n numbering in reports.
struct PicodInstance {
  int m = 0;
  std::vector<MsgSet> clients;

  int n() const { return static_cast<int>(clients.size()); }
  MsgSet universe() const { return full_set(m); }
  MsgSet side_info(int i) const;     // 1-based; throws std::out_of_range
  MsgSet request_mask(int i) const;  // {1..m} \ S_i

  bool operator==(const PicodInstance&) const = default;
};

struct RequestSet {
  int client = 0;
  MsgSet messages = 0;
};

// Validates the instance invariants (m >= 1, proper subsets, distinct sets,
// n >= 1); throws std::invalid_argument on violation.
PicodInstance make_instance(int m, std::vector<MsgSet> clients);

RequestSet request_set(const PicodInstance&, int i);

// True iff s is the side-information set of some client. The full set {1..m}
// is neither present nor absent and is rejected.
bool is_present(const PicodInstance&, MsgSet s);

// Maximum over messages j of the number of request sets containing j.
int delta(const PicodInstance&);

// All side-information sets whose size lies in sigma (subset of {0..m-1}).
PicodInstance complete_sigma(int m, const std::vector<int>& sigma);

// Instance whose request sets are exactly the blocks of the given partition
// chain: each level partitions the same ground set A, and every block of
// level i splits into at least two blocks of level i+1.
PicodInstance partition_class_instance(int m, const std::vector<std::vector<MsgSet>>& levels);

// n distinct uniformly drawn proper subsets of {1..m}; deterministic per seed.
PicodInstance random_instance(int m, int n, std::uint64_t seed);

// If the client family is exactly {S : |S| in Sigma}, returns Sigma ascending.
std::optional<std::vector<int>> detect_complete_sigma(const PicodInstance&);

// Bundled named instances: "example2", "lemma1-demo", "singletons-3".
PicodInstance builtin_instance(std::string_view name);
std::vector<std::string> builtin_names();

// All 2^m - 1 proper subsets of {1..m} in canonical (size, lex) order.
std::vector<MsgSet> proper_subsets_canonical(int m);

// Visits every instance with exactly n distinct proper subsets of {1..m},
// clients in canonical order. Guarded by max_count on C(2^m - 1, n).
void for_each_instance(int m, int n, const std::function<void(const PicodInstance&)>& fn,
                       std::uint64_t max_count = 10'000'000);

}  // namespace picod
