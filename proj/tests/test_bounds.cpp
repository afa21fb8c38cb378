#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "picod/bounds.hpp"
#include "picod/exact.hpp"

using namespace picod;

TEST_CASE("nested-collection validation") {
  const auto ex2 = builtin_instance("example2");
  SUBCASE("the demo collection is valid") {
    CHECK(validate_nested_collection(ex2, NestedCollection{{{1}, {2, 3, 4}, {5, 6, 7}}}));
  }
  SUBCASE("a single level is always valid") {
    CHECK(validate_nested_collection(ex2, NestedCollection{{{5, 9, 11}}}));
  }
  SUBCASE("an uncovered missing message invalidates") {
    CHECK_FALSE(validate_nested_collection(ex2, NestedCollection{{{1}, {2}}}));
  }
  SUBCASE("bad client indices are rejected") {
    CHECK_THROWS_AS(validate_nested_collection(ex2, NestedCollection{{{12}}}), std::out_of_range);
  }
}

TEST_CASE("rooted collection construction") {
  const auto ex2 = builtin_instance("example2");
  SUBCASE("root 1 reproduces the documented trace") {
    const auto res = nested_collection_rooted(ex2, 1);
    CHECK(res.depth == 3);
    REQUIRE(res.collection.length() == 3);
    CHECK(res.collection.levels[0] == std::vector<int>{1});
    CHECK(res.collection.levels[1] == std::vector<int>{2, 3, 4, 8});
    CHECK(res.collection.levels[2] == std::vector<int>{2, 5, 6, 7, 9, 10, 11});
    CHECK(res.stop_client == 5);
    CHECK(res.stop_msg == 4);
    CHECK(validate_nested_collection(ex2, res.collection));
  }
  SUBCASE("a root of size m-1 stops immediately") {
    const auto res = nested_collection_rooted(ex2, 5);
    CHECK(res.depth == 1);
    CHECK(res.stop_client == 5);
    CHECK(res.stop_msg == 4);
  }
  SUBCASE("every rooted collection validates") {
    for (int root = 1; root <= ex2.n(); ++root)
      CHECK(validate_nested_collection(ex2, nested_collection_rooted(ex2, root).collection));
  }
}

TEST_CASE("nesting-number lower bound") {
  const auto ex2 = builtin_instance("example2");
  const auto lb = eta_lower_bound(ex2);
  CHECK(lb.value == 3);
  CHECK(validate_nested_collection(ex2, lb.witness));
  CHECK(lb.witness.length() == lb.value);

  CHECK(eta_lower_bound(make_instance(5, {set_of({2, 3})})).value == 1);
  CHECK(eta_lower_bound(complete_sigma(3, {0, 1, 2})).value == 3);

  SUBCASE("root sweep is schedule independent") {
    const auto a = eta_lower_bound(ex2, 1);
    const auto b = eta_lower_bound(ex2, 4);
    CHECK(a.value == b.value);
    CHECK(a.root == b.root);
  }
}

TEST_CASE("exact nesting number") {
  CHECK(eta_exact(builtin_instance("example2"), Budgets{.eta_exact_max_n = 16}) == 3);
  CHECK(eta_exact(make_instance(4, {set_of({1, 3})})) == 1);
  for (int m = 1; m <= 3; ++m) {
    for (MsgSet pick = 1; pick < (MsgSet{1} << m); ++pick) {
      std::vector<int> sigma;
      for (int s = 0; s < m; ++s)
        if ((pick >> s) & 1) sigma.push_back(s);
      const auto inst = complete_sigma(m, sigma);
      CHECK(eta_exact(inst, Budgets{.eta_exact_max_n = 16}) >= static_cast<int>(sigma.size()));
    }
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(eta_exact(builtin_instance("example2")), BudgetExceeded);  // n = 11 > 10
    CHECK_THROWS_AS(eta_exact(random_instance(8, 4, 1)), BudgetExceeded);      // m = 8 > 6
  }
}

TEST_CASE("exact nesting number agrees with the family-state search") {
  for (int n = 1; n <= 3; ++n)
    for_each_instance(3, n, [](const PicodInstance& inst) {
      CHECK(eta_exact(inst) == oracle::eta_by_family_search(inst));
    });
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = random_instance(4, 1 + static_cast<int>(rng() % 5), rng());
    CHECK(eta_exact(inst) == oracle::eta_by_family_search(inst));
  }
}

TEST_CASE("rooted collections never beat the exact nesting number") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_instance(4, 1 + static_cast<int>(rng() % 9), rng());
    const int eta = eta_exact(inst, Budgets{.eta_exact_max_n = 16});
    for (int root = 1; root <= inst.n(); ++root) CHECK(nested_collection_rooted(inst, root).depth <= eta);
    CHECK(eta_lower_bound(inst).value <= eta);
  }
}

TEST_CASE("decoding-chain bounds") {
  SUBCASE("demo instance reaches three") {
    const auto ex2 = builtin_instance("example2");
    const auto t1 = tau1(ex2);
    const auto t2 = tau2(ex2);
    CHECK(t1.value == 3);
    CHECK(t2.value == 3);
    // witnesses re-validate through the public chain evaluators
    CHECK(max_chain_hits(ex2, t1.witness) == 3);
    CHECK(max_chain_hits_refined(ex2, t2.witness) == 3);
  }
  SUBCASE("three singletons separate the two bounds") {
    const auto inst = builtin_instance("singletons-3");
    CHECK(tau1(inst).value == 1);
    CHECK(tau2(inst).value == 2);
  }
  SUBCASE("at most two clients gives one") {
    for_each_instance(3, 2, [](const PicodInstance& inst) {
      CHECK(tau1(inst).value == 1);
      CHECK(tau2(inst).value == 1);
    });
  }
  SUBCASE("refined never drops below basic on small instances") {
    for (int n = 1; n <= 3; ++n)
      for_each_instance(3, n, [](const PicodInstance& inst) {
        CHECK(tau2(inst).value >= tau1(inst).value);
      });
  }
  SUBCASE("split over demand functions is schedule independent") {
    const auto ex2 = builtin_instance("example2");
    const auto serial1 = tau1(ex2, Budgets{}, 1), parallel1 = tau1(ex2, Budgets{}, 4);
    CHECK(serial1.value == parallel1.value);
    CHECK(serial1.witness == parallel1.witness);
    const auto serial2 = tau2(ex2, Budgets{}, 1), parallel2 = tau2(ex2, Budgets{}, 4);
    CHECK(serial2.value == parallel2.value);
    CHECK(serial2.witness == parallel2.witness);
  }
  SUBCASE("demand-function budget") {
    Budgets tight;
    tight.max_demand_functions = 5;
    CHECK_THROWS_AS(tau1(builtin_instance("example2"), tight), BudgetExceeded);
  }
  SUBCASE("invalid demand functions are rejected") {
    const auto inst = builtin_instance("singletons-3");
    CHECK_THROWS_AS(max_chain_hits(inst, DemandFunction{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(max_chain_hits(inst, DemandFunction{1, 1, 3}), std::invalid_argument);  // 1 in S_1
  }
}

TEST_CASE("chain DP agrees with the permutation walk for every demand choice") {
  const auto check_all_demands = [](const PicodInstance& inst) {
    std::vector<std::vector<int>> choices;
    for (int i = 1; i <= inst.n(); ++i) choices.push_back(set_elements(inst.request_mask(i)));
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
      DemandFunction d(choices.size());
      for (size_t i = 0; i < choices.size(); ++i) d[i] = choices[i][idx[i]];
      CHECK(max_chain_hits(inst, d) == oracle::max_hits_by_permutation_walk(inst, d, false));
      CHECK(max_chain_hits_refined(inst, d) == oracle::max_hits_by_permutation_walk(inst, d, true));

      size_t k = choices.size();
      while (k-- > 0) {
        if (++idx[k] < choices[k].size()) break;
        idx[k] = 0;
      }
      if (k == SIZE_MAX) break;
    }
  };
  for (int n = 1; n <= 3; ++n) for_each_instance(3, n, check_all_demands);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) check_all_demands(random_instance(4, 1 + static_cast<int>(rng() % 5), rng()));
}

TEST_CASE("absent-chain bound") {
  SUBCASE("no absent sets") {
    const auto inst = complete_sigma(3, {0, 1, 2});
    const auto res = absent_chain_bound(inst);
    CHECK(res.chain_length == 0);
    CHECK(res.bound == 3);
    CHECK(res.chain.empty());
  }
  SUBCASE("lone empty client") {
    const auto inst = make_instance(3, {MsgSet{0}});
    const auto res = absent_chain_bound(inst);
    CHECK(res.chain_length == 2);
    CHECK(res.bound == 1);
    REQUIRE(res.chain.size() == 2);
    CHECK((res.chain[0] & ~res.chain[1]) == 0);
    CHECK(res.chain[0] != res.chain[1]);
    for (MsgSet s : res.chain) CHECK_FALSE(is_present(inst, s));
  }
  SUBCASE("all proper subsets of size <= 3 present") {
    CHECK(absent_chain_bound(complete_sigma(4, {0, 1, 2, 3})).bound == 4);
  }
}

TEST_CASE("structural m-1 bounds") {
  SUBCASE("all proper subsets present") {
    const auto inst = complete_sigma(3, {0, 1, 2});
    CHECK(absent_union_bound(inst) == 2);
    CHECK(absent_nesting_bound(inst) == 2);  // vacuously: no absent pair at all
    CHECK(structural_bound(inst) == 2);
  }
  SUBCASE("exactly one nested absent pair") {
    auto pool = proper_subsets_canonical(3);
    std::erase(pool, set_of({1}));
    std::erase(pool, set_of({1, 2}));
    const auto inst = make_instance(3, pool);
    CHECK(absent_nesting_bound(inst) == 2);
    CHECK(structural_bound(inst) == 2);
  }
  SUBCASE("dense absent family fails both conditions") {
    const auto inst = make_instance(3, {MsgSet{0}});
    CHECK(absent_union_bound(inst) == std::nullopt);
    CHECK(absent_nesting_bound(inst) == std::nullopt);
    CHECK(structural_bound(inst) == std::nullopt);
  }
}

TEST_CASE("aggregated report") {
  SUBCASE("demo instance") {
    BoundOptions opt;
    opt.with_eta_exact = true;
    opt.budgets.eta_exact_max_n = 16;
    const auto rep = bound_report(builtin_instance("example2"), opt);
    CHECK(rep.best_lower == 3);
    CHECK(rep.eta_lb->value == 3);
    CHECK(*rep.eta_exact == 3);
    CHECK(rep.tau1->value == 3);
    CHECK(rep.tau2->value == 3);
    CHECK(rep.absent_chain->bound == 1);
    CHECK_FALSE(rep.absent_union.has_value());
    CHECK_FALSE(rep.absent_nesting.has_value());
    CHECK_FALSE(rep.sigma.has_value());
  }
  SUBCASE("two clients") {
    const auto rep = bound_report(make_instance(4, {MsgSet{0}, set_of({1, 2})}));
    CHECK(rep.best_lower == 1);
  }
  SUBCASE("three singletons") {
    const auto rep = bound_report(builtin_instance("singletons-3"));
    CHECK(rep.best_lower == 2);
    CHECK(rep.best_name == "tau2");
    CHECK(rep.tau1->value == 1);
    CHECK(rep.eta_lb->value == 1);
    CHECK(rep.sigma == 1);
  }
  SUBCASE("witnesses re-validate") {
    const auto inst = complete_sigma(3, {0, 2});
    const auto rep = bound_report(inst);
    CHECK(validate_nested_collection(inst, rep.eta_lb->witness));
    CHECK(rep.eta_lb->witness.length() == rep.eta_lb->value);
    CHECK(max_chain_hits(inst, rep.tau1->witness) == rep.tau1->value);
    CHECK(max_chain_hits_refined(inst, rep.tau2->witness) == rep.tau2->value);
    MsgSet prev = 0;
    bool first = true;
    for (MsgSet s : rep.absent_chain->chain) {
      if (!first) {
        CHECK((prev & ~s) == 0);
        CHECK(prev != s);
      }
      CHECK_FALSE(is_present(inst, s));
      prev = s;
      first = false;
    }
  }
}

TEST_CASE("ordering of the four parameters on every tiny instance") {
  for (int n = 1; n <= 3; ++n)
    for_each_instance(3, n, [](const PicodInstance& inst) {
      const int eta = eta_exact(inst);
      const int t1 = tau1(inst).value;
      const int t2 = tau2(inst).value;
      const int beta2 = exact_linear_beta(inst, 2)->beta_lin;
      CHECK(eta <= t1);
      CHECK(t1 <= t2);
      CHECK(t2 <= beta2);
    });
}
