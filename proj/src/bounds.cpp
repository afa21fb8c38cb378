#include "picod/bounds.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <thread>
#include <unordered_map>

namespace picod {

bool validate_nested_collection(const PicodInstance& inst, const NestedCollection& nc) {
  for (const auto& level : nc.levels)
    for (int c : level)
      if (c < 1 || c > inst.n()) throw std::out_of_range("collection references client " + std::to_string(c));
  for (size_t li = 0; li + 1 < nc.levels.size(); ++li) {
    for (int c : nc.levels[li]) {
      const MsgSet s = inst.side_info(c);
      for (int j = 1; j <= inst.m; ++j) {
        if (has_msg(s, j)) continue;
        const MsgSet target = s | msg_bit(j);
        bool covered = false;
        for (int c2 : nc.levels[li + 1]) covered = covered || (target & ~inst.side_info(c2)) == 0;
        if (!covered) return false;
      }
    }
  }
  return true;
}

NestedCollection size_level_collection(const PicodInstance& inst, const std::vector<int>& sigma) {
  std::vector<int> sizes(sigma);
  std::sort(sizes.begin(), sizes.end());
  NestedCollection nc;
  for (int s : sizes) {
    std::vector<int> level;
    for (int c = 1; c <= inst.n(); ++c)
      if (set_size(inst.side_info(c)) == s) level.push_back(c);
    nc.levels.push_back(std::move(level));
  }
  return nc;
}

RootedCollectionResult nested_collection_rooted(const PicodInstance& inst, int root) {
  if (root < 1 || root > inst.n()) throw std::out_of_range("root client index out of range");
  RootedCollectionResult res;
  res.collection.levels.push_back({root});
  while (true) {
    std::set<int> next;
    for (int c : res.collection.levels.back()) {
      const MsgSet s = inst.side_info(c);
      for (int j = 1; j <= inst.m; ++j) {
        if (has_msg(s, j)) continue;
        const MsgSet target = s | msg_bit(j);
        int best = 0, best_size = INT_MAX;
        for (int c2 = 1; c2 <= inst.n(); ++c2) {
          const MsgSet s2 = inst.side_info(c2);
          if ((target & ~s2) != 0) continue;
          const int sz = set_size(s2);
          if (sz < best_size || (sz == best_size && c2 < best)) {
            best = c2;
            best_size = sz;
          }
        }
        if (best == 0) {
          res.depth = res.collection.length();
          res.stop_client = c;
          res.stop_msg = j;
          return res;
        }
        next.insert(best);
      }
    }
    res.collection.levels.emplace_back(next.begin(), next.end());
  }
}

namespace {

template <typename Fn>
void run_chunked(std::uint64_t total, int jobs, Fn&& body) {
  if (jobs <= 1 || total < 2) {
    body(0, std::uint64_t{0}, total);
    return;
  }
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    threads.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

EtaLowerBound eta_lower_bound(const PicodInstance& inst, int jobs) {
  const std::uint64_t n = static_cast<std::uint64_t>(inst.n());
  std::vector<std::pair<int, int>> best_per_worker(static_cast<size_t>(std::max(jobs, 1)), {0, 0});  // (depth, root)
  run_chunked(n, jobs, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    auto& best = best_per_worker[static_cast<size_t>(w)];
    for (std::uint64_t r = lo; r < hi; ++r) {
      const int root = static_cast<int>(r) + 1;
      const int depth = nested_collection_rooted(inst, root).depth;
      if (depth > best.first) best = {depth, root};
    }
  });
  std::pair<int, int> best = {0, 0};
  for (const auto& b : best_per_worker)
    if (b.first > best.first) best = b;  // lowest root wins ties: workers scan roots in ascending blocks
  auto rooted = nested_collection_rooted(inst, best.second);
  return EtaLowerBound{best.first, best.second, std::move(rooted.collection)};
}

int eta_exact(const PicodInstance& inst, const Budgets& budgets) {
  if (inst.n() > budgets.eta_exact_max_n || inst.m > budgets.eta_exact_max_m)
    throw BudgetExceeded("exact nesting number limited to n <= " + std::to_string(budgets.eta_exact_max_n) +
                         ", m <= " + std::to_string(budgets.eta_exact_max_m));
  // Depth of the best collection whose first level is {c} alone. Any level of
  // any collection can be shrunk to a single set (and unions of collections
  // are collections), so the best next level picks, independently per missing
  // message, the deepest client covering it.
  std::vector<int> memo(static_cast<size_t>(inst.n()), 0);
  auto depth = [&](auto&& self, int c) -> int {
    int& d = memo[static_cast<size_t>(c - 1)];
    if (d != 0) return d;
    const MsgSet s = inst.side_info(c);
    int acc = INT_MAX;
    for (int j = 1; j <= inst.m; ++j) {
      if (has_msg(s, j)) continue;
      const MsgSet target = s | msg_bit(j);
      int best = 0;
      for (int c2 = 1; c2 <= inst.n(); ++c2)
        if ((target & ~inst.side_info(c2)) == 0) best = std::max(best, self(self, c2));
      if (best == 0) return d = 1;
      acc = std::min(acc, best);
    }
    return d = 1 + acc;
  };
  int eta = 0;
  for (int c = 1; c <= inst.n(); ++c) eta = std::max(eta, depth(depth, c));
  return eta;
}

namespace {

struct ChainContext {
  const PicodInstance& inst;
  std::unordered_map<MsgSet, int> client_of;  // side-information set -> client index
  std::vector<MsgSet> order;                  // all subsets, largest first

  explicit ChainContext(const PicodInstance& i) : inst(i) {
    client_of.reserve(static_cast<size_t>(i.n()) * 2);
    for (int c = 1; c <= i.n(); ++c) client_of.emplace(i.side_info(c), c);
    order.resize(static_cast<size_t>(full_set(i.m)) + 1);
    for (MsgSet t = 0; t <= full_set(i.m); ++t) order[static_cast<size_t>(t)] = t;
    std::sort(order.begin(), order.end(), [](MsgSet a, MsgSet b) { return set_size(a) > set_size(b); });
  }
};

void check_demand(const PicodInstance& inst, const DemandFunction& d) {
  if (static_cast<int>(d.size()) != inst.n())
    throw std::invalid_argument("demand function must assign a message to every client");
  for (int i = 1; i <= inst.n(); ++i)
    if (d[static_cast<size_t>(i - 1)] < 1 || d[static_cast<size_t>(i - 1)] > inst.m ||
        !has_msg(inst.request_mask(i), d[static_cast<size_t>(i - 1)]))
      throw std::invalid_argument("demand of client " + std::to_string(i) + " is not in its request set");
}

// DP over subset states, largest first. A present state forces its demanded
// message (one hit); an absent state may skip any missing message, and under
// the refined rules may instead pull in the demand of a present client
// strictly inside it (one hit).
int chain_value(const ChainContext& ctx, const DemandFunction& d, bool refined, std::vector<std::int16_t>& dp) {
  const int m = ctx.inst.m;
  const MsgSet full = full_set(m);
  dp.assign(static_cast<size_t>(full) + 1, 0);

  for (MsgSet t : ctx.order) {
    if (t == full) continue;
    const auto it = ctx.client_of.find(t);
    if (it != ctx.client_of.end()) {
      dp[static_cast<size_t>(t)] =
          static_cast<std::int16_t>(1 + dp[static_cast<size_t>(t | msg_bit(d[static_cast<size_t>(it->second - 1)]))]);
      continue;
    }
    std::int16_t best = 0;
    for (int j = 1; j <= m; ++j)
      if (!has_msg(t, j)) best = std::max(best, dp[static_cast<size_t>(t | msg_bit(j))]);
    if (refined) {
      for (int c = 1; c <= ctx.inst.n(); ++c) {
        const MsgSet s = ctx.inst.side_info(c);
        const int dc = d[static_cast<size_t>(c - 1)];
        if (s != t && (s & ~t) == 0 && !has_msg(t, dc))
          best = std::max(best, static_cast<std::int16_t>(1 + dp[static_cast<size_t>(t | msg_bit(dc))]));
      }
    }
    dp[static_cast<size_t>(t)] = best;
  }
  return dp[0];
}

struct TauSearchSpace {
  std::vector<std::vector<int>> choices;  // request-set elements per client
  std::uint64_t total = 1;
};

TauSearchSpace demand_space(const PicodInstance& inst, const Budgets& budgets) {
  if (inst.m > budgets.max_m_exponential)
    throw BudgetExceeded("decoding-chain DP needs 2^" + std::to_string(inst.m) + " states");
  TauSearchSpace sp;
  for (int i = 1; i <= inst.n(); ++i) {
    sp.choices.push_back(set_elements(inst.request_mask(i)));
    const std::uint64_t k = sp.choices.back().size();
    if (sp.total > budgets.max_demand_functions / k)
      throw BudgetExceeded("demand-function count exceeds the cap of " +
                           std::to_string(budgets.max_demand_functions));
    sp.total *= k;
  }
  return sp;
}

DemandFunction decode_demand(const TauSearchSpace& sp, std::uint64_t index) {
  DemandFunction d(sp.choices.size());
  for (size_t i = 0; i < sp.choices.size(); ++i) {
    const std::uint64_t k = sp.choices[i].size();
    d[i] = sp.choices[i][static_cast<size_t>(index % k)];
    index /= k;
  }
  return d;
}

TauResult tau_min(const PicodInstance& inst, const Budgets& budgets, int jobs, bool refined) {
  const TauSearchSpace sp = demand_space(inst, budgets);
  const ChainContext ctx(inst);

  struct Best {
    int value = INT_MAX;
    std::uint64_t index = 0;
  };
  std::vector<Best> per_worker(static_cast<size_t>(std::max(jobs, 1)));
  run_chunked(sp.total, jobs, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    Best& best = per_worker[static_cast<size_t>(w)];
    std::vector<std::int16_t> dp;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const DemandFunction d = decode_demand(sp, idx);
      const int v = chain_value(ctx, d, refined, dp);
      if (v < best.value) best = {v, idx};
    }
  });
  Best best;
  for (const auto& b : per_worker)
    if (b.value < best.value || (b.value == best.value && b.index < best.index)) best = b;
  return TauResult{best.value, decode_demand(sp, best.index)};
}

}  // namespace

int max_chain_hits(const PicodInstance& inst, const DemandFunction& d) {
  check_demand(inst, d);
  if (inst.m > 25) throw BudgetExceeded("decoding-chain DP needs 2^" + std::to_string(inst.m) + " states");
  const ChainContext ctx(inst);
  std::vector<std::int16_t> dp;
  return chain_value(ctx, d, false, dp);
}

int max_chain_hits_refined(const PicodInstance& inst, const DemandFunction& d) {
  check_demand(inst, d);
  if (inst.m > 25) throw BudgetExceeded("decoding-chain DP needs 2^" + std::to_string(inst.m) + " states");
  const ChainContext ctx(inst);
  std::vector<std::int16_t> dp;
  return chain_value(ctx, d, true, dp);
}

TauResult tau1(const PicodInstance& inst, const Budgets& budgets, int jobs) {
  return tau_min(inst, budgets, jobs, false);
}

TauResult tau2(const PicodInstance& inst, const Budgets& budgets, int jobs) {
  return tau_min(inst, budgets, jobs, true);
}

namespace {

void check_subset_budget(const PicodInstance& inst, const Budgets& budgets, const char* what) {
  if (inst.m > budgets.max_m_exponential)
    throw BudgetExceeded(std::string(what) + " needs 2^" + std::to_string(inst.m) + " states");
}

}  // namespace

AbsentChainBound absent_chain_bound(const PicodInstance& inst, const Budgets& budgets) {
  check_subset_budget(inst, budgets, "absent-chain bound");
  const MsgSet full = inst.universe();
  std::vector<bool> absent(static_cast<size_t>(full) + 1, true);
  absent[static_cast<size_t>(full)] = false;  // the full set is never absent
  for (MsgSet s : inst.clients) absent[static_cast<size_t>(s)] = false;

  std::vector<MsgSet> order(static_cast<size_t>(full) + 1);
  for (MsgSet t = 0; t <= full; ++t) order[static_cast<size_t>(t)] = t;
  std::sort(order.begin(), order.end(), [](MsgSet a, MsgSet b) { return set_size(a) < set_size(b); });

  // e[T]: longest absent chain ending at absent T; h[T]: best e over absent
  // subsets of T.
  std::vector<std::int16_t> e(static_cast<size_t>(full) + 1, 0), h(static_cast<size_t>(full) + 1, 0);
  for (MsgSet t : order) {
    std::int16_t under = 0;
    for (int j : set_elements(t)) under = std::max(under, h[static_cast<size_t>(t & ~msg_bit(j))]);
    if (absent[static_cast<size_t>(t)]) e[static_cast<size_t>(t)] = static_cast<std::int16_t>(1 + under);
    h[static_cast<size_t>(t)] = std::max(under, e[static_cast<size_t>(t)]);
  }

  AbsentChainBound res;
  res.chain_length = h[static_cast<size_t>(full)];
  res.bound = inst.m - res.chain_length;
  // reconstruct one witness chain, longest link first
  MsgSet top = 0;
  for (MsgSet t = 0; t <= full; ++t)
    if (absent[static_cast<size_t>(t)] && e[static_cast<size_t>(t)] == res.chain_length) {
      top = t;
      break;
    }
  int need = res.chain_length;
  while (need > 0) {
    res.chain.push_back(top);
    --need;
    if (need == 0) break;
    MsgSet sub = (top - 1) & top;
    for (;; sub = (sub - 1) & top) {
      if (absent[static_cast<size_t>(sub)] && e[static_cast<size_t>(sub)] == need) {
        top = sub;
        break;
      }
      if (sub == 0) break;
    }
  }
  std::reverse(res.chain.begin(), res.chain.end());
  return res;
}

std::optional<int> absent_union_bound(const PicodInstance& inst, const Budgets& budgets) {
  check_subset_budget(inst, budgets, "absent-union bound");
  const MsgSet full = inst.universe();
  std::vector<bool> present(static_cast<size_t>(full) + 1, false);
  for (MsgSet s : inst.clients) present[static_cast<size_t>(s)] = true;
  MsgSet uni = 0;
  for (MsgSet t = 0; t < full; ++t)
    if (!present[static_cast<size_t>(t)]) uni |= t;
  if (uni != full) return inst.m - 1;
  return std::nullopt;
}

std::optional<int> absent_nesting_bound(const PicodInstance& inst, const Budgets& budgets) {
  check_subset_budget(inst, budgets, "absent-nesting bound");
  const MsgSet full = inst.universe();
  std::vector<bool> present(static_cast<size_t>(full) + 1, false);
  for (MsgSet s : inst.clients) present[static_cast<size_t>(s)] = true;

  std::vector<std::int64_t> f(static_cast<size_t>(full) + 1, 0);
  for (MsgSet t = 0; t < full; ++t) f[static_cast<size_t>(t)] = present[static_cast<size_t>(t)] ? 0 : 1;

  // subset-sum (zeta) transform: f[T] becomes the number of absent subsets of T
  for (int j = 1; j <= inst.m; ++j)
    for (MsgSet t = 0; t <= full; ++t)
      if (has_msg(t, j)) f[static_cast<size_t>(t)] += f[static_cast<size_t>(t & ~msg_bit(j))];

  // nested pairs: over absent B, count absent strict subsets of B
  std::int64_t pairs = 0;
  for (MsgSet t = 0; t < full; ++t)
    if (!present[static_cast<size_t>(t)]) pairs += f[static_cast<size_t>(t)] - 1;
  if (pairs <= 1) return inst.m - 1;
  return std::nullopt;
}

std::optional<int> structural_bound(const PicodInstance& inst, const Budgets& budgets) {
  if (auto b = absent_union_bound(inst, budgets)) return b;
  return absent_nesting_bound(inst, budgets);
}

BoundReport bound_report(const PicodInstance& inst, const BoundOptions& opt) {
  BoundReport rep;
  if (opt.with_eta_lb) rep.eta_lb = eta_lower_bound(inst, opt.jobs);
  if (opt.with_eta_exact) rep.eta_exact = picod::eta_exact(inst, opt.budgets);
  if (opt.with_tau) {
    rep.tau1 = picod::tau1(inst, opt.budgets, opt.jobs);
    rep.tau2 = picod::tau2(inst, opt.budgets, opt.jobs);
  }
  if (opt.with_absent_chain) rep.absent_chain = picod::absent_chain_bound(inst, opt.budgets);
  if (opt.with_structural) {
    rep.absent_union = absent_union_bound(inst, opt.budgets);
    rep.absent_nesting = absent_nesting_bound(inst, opt.budgets);
  }
  if (opt.with_sigma) {
    if (const auto sig = detect_complete_sigma(inst)) rep.sigma = static_cast<int>(sig->size());
  }

  rep.best_lower = 1;
  rep.best_name = "trivial";
  const auto consider = [&rep](const char* name, std::optional<int> value) {
    if (value && *value > rep.best_lower) {
      rep.best_lower = *value;
      rep.best_name = name;
    }
  };
  consider("eta_exact", rep.eta_exact);
  consider("tau2", rep.tau2 ? std::optional<int>(rep.tau2->value) : std::nullopt);
  consider("tau1", rep.tau1 ? std::optional<int>(rep.tau1->value) : std::nullopt);
  consider("eta_lb", rep.eta_lb ? std::optional<int>(rep.eta_lb->value) : std::nullopt);
  consider("absent_chain", rep.absent_chain ? std::optional<int>(rep.absent_chain->bound) : std::nullopt);
  consider("absent_union", rep.absent_union);
  consider("absent_nesting", rep.absent_nesting);
  consider("sigma", rep.sigma);
  return rep;
}

}  // namespace picod
