#pragma once

#include <optional>
#include <string>

#include "picod/instance.hpp"

namespace picod {

// Levels of client indices (1-based; each level kept sorted ascending).
// Valid iff for every consecutive pair of levels, every S in the lower level
// and every j outside S, some S' in the next level contains S together with j.
struct NestedCollection {
  std::vector<std::vector<int>> levels;

  int length() const { return static_cast<int>(levels.size()); }
};

bool validate_nested_collection(const PicodInstance&, const NestedCollection&);

// Levels grouping the clients of a complete-Sigma instance by side-information
// size, ascending; a nested collection of length |Sigma|.
NestedCollection size_level_collection(const PicodInstance&, const std::vector<int>& sigma);

struct RootedCollectionResult {
  NestedCollection collection;
  int depth = 0;        // number of levels built
  int stop_client = 0;  // the (S, j) whose successor set came up empty
  int stop_msg = 0;
};

// Grows a nested collection level by level from the given root client: for
// each set S of the current level and each j outside S, the smallest client
// containing S and j is added to the next level (ties: lowest client index);
// growth stops at the first (S, j) with no containing client.
RootedCollectionResult nested_collection_rooted(const PicodInstance&, int root);

struct EtaLowerBound {
  int value = 0;
  int root = 0;
  NestedCollection witness;
};

// Best rooted collection over all clients; a lower bound on the nesting
// number. Runs the full root sweep in O(m^3 n^2).
EtaLowerBound eta_lower_bound(const PicodInstance&, int jobs = 1);

// Exact nesting number.
int eta_exact(const PicodInstance&, const Budgets& = {});

// Decoding choice: entry i-1 is the message client i decodes, inside R_i.
using DemandFunction = std::vector<int>;

// Maximum number of hits over all decoding chains for a fixed demand choice.
// Basic chains: a present state forces its chosen message (one hit), an
// absent state skips any missing message for free.
int max_chain_hits(const PicodInstance&, const DemandFunction&);
// Refined chains: an absent state may also pull in the chosen message of any
// present client strictly inside it, at the cost of one hit.
int max_chain_hits_refined(const PicodInstance&, const DemandFunction&);

struct TauResult {
  int value = 0;
  DemandFunction witness;  // a minimizing demand choice
};

TauResult tau1(const PicodInstance&, const Budgets& = {}, int jobs = 1);
TauResult tau2(const PicodInstance&, const Budgets& = {}, int jobs = 1);

struct AbsentChainBound {
  int bound = 0;              // m - chain_length
  int chain_length = 0;       // longest strictly increasing chain of absent sets
  std::vector<MsgSet> chain;  // a witness chain
};

AbsentChainBound absent_chain_bound(const PicodInstance&, const Budgets& = {});

// m - 1 when the union of all absent clients misses some message.
std::optional<int> absent_union_bound(const PicodInstance&, const Budgets& = {});
// m - 1 when at most one pair of absent clients is nested.
std::optional<int> absent_nesting_bound(const PicodInstance&, const Budgets& = {});
// Either of the two structural m - 1 rules.
std::optional<int> structural_bound(const PicodInstance&, const Budgets& = {});

struct BoundOptions {
  bool with_eta_lb = true;
  bool with_eta_exact = false;
  bool with_tau = true;
  bool with_absent_chain = true;
  bool with_structural = true;
  bool with_sigma = true;
  Budgets budgets;
  int jobs = 1;
};

struct BoundReport {
  std::optional<EtaLowerBound> eta_lb;
  std::optional<int> eta_exact;
  std::optional<TauResult> tau1;
  std::optional<TauResult> tau2;
  std::optional<AbsentChainBound> absent_chain;
  std::optional<int> absent_union;    // m-1 rule: absent union misses a message
  std::optional<int> absent_nesting;  // m-1 rule: at most one nested absent pair
  std::optional<int> sigma;           // |Sigma| for complete-Sigma instances
  int best_lower = 1;
  std::string best_name = "trivial";
};

BoundReport bound_report(const PicodInstance&, const BoundOptions& = {});

}  // namespace picod
