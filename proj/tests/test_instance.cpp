#include <doctest.h>

#include <algorithm>

#include "picod/instance.hpp"
#include "picod/json_io.hpp"

using namespace picod;

TEST_CASE("parsing and canonicalization") {
  SUBCASE("plain document") {
    const auto inst = parse_instance(R"({"m":4,"clients":[[],[1,2],[3]]})");
    CHECK(inst.m == 4);
    CHECK(inst.n() == 3);
    CHECK(inst.clients[0] == 0);
    CHECK(inst.clients[1] == set_of({1, 2}));
    CHECK(inst.clients[2] == set_of({3}));
  }
  SUBCASE("full side-information set rejected") {
    CHECK_THROWS_AS(parse_instance(R"({"m":2,"clients":[[1,2]]})"), std::invalid_argument);
  }
  SUBCASE("duplicates collapse with a warning") {
    std::vector<std::string> warnings;
    const auto inst = parse_instance(R"({"m":3,"clients":[[1],[1]]})", &warnings);
    CHECK(inst.n() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("{1}") != std::string::npos);
  }
  SUBCASE("malformed and invalid documents") {
    CHECK_THROWS_AS(parse_instance("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"m":0,"clients":[[ ]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"m":3,"clients":[[4]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"m":3,"clients":[]})"), std::invalid_argument);
  }
  SUBCASE("sets may be listed in any order") {
    const auto inst = parse_instance(R"({"m":4,"clients":[[4,1],[2]]})");
    CHECK(inst.clients[0] == set_of({1, 4}));
  }
}

TEST_CASE("round trip is the identity") {
  const auto check = [](const PicodInstance& inst) {
    CHECK(parse_instance(to_json(inst).dump()) == inst);
  };
  for (const auto& name : builtin_names()) check(builtin_instance(name));
  for (std::uint64_t seed = 0; seed < 20; ++seed) check(random_instance(5, 7, seed));
}

TEST_CASE("request sets") {
  const auto ex2 = builtin_instance("example2");
  CHECK(request_set(ex2, 2).messages == set_of({3, 4}));
  CHECK(request_set(ex2, 1).messages == set_of({1, 2, 3, 4}));
  CHECK(request_set(ex2, 5).messages == set_of({4}));
  CHECK_THROWS_AS(request_set(ex2, 12), std::out_of_range);

  for (int i = 1; i <= ex2.n(); ++i) {
    CHECK((ex2.side_info(i) | ex2.request_mask(i)) == ex2.universe());
    CHECK((ex2.side_info(i) & ex2.request_mask(i)) == 0);
  }
}

TEST_CASE("present and absent sets") {
  const auto ex2 = builtin_instance("example2");
  CHECK(is_present(ex2, set_of({3})));
  CHECK_FALSE(is_present(ex2, set_of({4})));
  CHECK_THROWS_AS(is_present(ex2, ex2.universe()), std::invalid_argument);
}

TEST_CASE("degree over request sets") {
  CHECK(delta(builtin_instance("example2")) == 7);
  CHECK(delta(make_instance(3, {set_of({1, 2})})) == 1);
  CHECK(delta(builtin_instance("lemma1-demo")) == 2);
}

TEST_CASE("complete-sigma generator") {
  CHECK(complete_sigma(3, {0, 1, 2}).n() == 7);
  const auto singles = complete_sigma(4, {1});
  CHECK(singles.n() == 4);
  for (MsgSet s : singles.clients) CHECK(set_size(s) == 1);
  CHECK(complete_sigma(4, {0, 2}).n() == 7);
  CHECK_THROWS_AS(complete_sigma(4, {}), std::invalid_argument);
  CHECK_THROWS_AS(complete_sigma(4, {4}), std::invalid_argument);

  SUBCASE("clients come out in canonical order") {
    const auto inst = complete_sigma(4, {0, 2});
    CHECK(std::is_sorted(inst.clients.begin(), inst.clients.end(), canonical_set_less));
  }

  SUBCASE("degree matches the binomial expression for all m <= 4") {
    for (int m = 1; m <= 4; ++m) {
      for (MsgSet pick = 1; pick < (MsgSet{1} << m); ++pick) {
        std::vector<int> sigma;
        for (int s = 0; s < m; ++s)
          if ((pick >> s) & 1) sigma.push_back(s);
        const auto inst = complete_sigma(m, sigma);
        std::uint64_t expected = 0;
        for (int s : sigma) expected += binomial(m, s) - binomial(m - 1, s - 1);
        CHECK(delta(inst) == static_cast<int>(expected));
      }
    }
  }
}

TEST_CASE("partition-chain generator") {
  SUBCASE("two-level demo") {
    const auto inst = partition_class_instance(
        4, {{set_of({1, 2, 3, 4})}, {set_of({1, 2}), set_of({3, 4})}});
    CHECK(inst.n() == 3);
    CHECK(std::find(inst.clients.begin(), inst.clients.end(), MsgSet{0}) != inst.clients.end());
    CHECK(std::find(inst.clients.begin(), inst.clients.end(), set_of({3, 4})) != inst.clients.end());
    CHECK(std::find(inst.clients.begin(), inst.clients.end(), set_of({1, 2})) != inst.clients.end());
  }
  SUBCASE("single level") {
    const auto inst = partition_class_instance(2, {{set_of({1, 2})}});
    CHECK(inst.n() == 1);
    CHECK(inst.clients[0] == 0);
  }
  SUBCASE("rejects a trivial refinement") {
    CHECK_THROWS_AS(partition_class_instance(4, {{set_of({1, 2, 3, 4})}, {set_of({1, 2, 3, 4})}}),
                    std::invalid_argument);
  }
  SUBCASE("rejects a non-partition") {
    CHECK_THROWS_AS(partition_class_instance(4, {{set_of({1, 2}), set_of({2, 3})}}), std::invalid_argument);
    CHECK_THROWS_AS(partition_class_instance(4, {{set_of({1, 2, 3, 4})}, {set_of({1, 2}), set_of({3})}}),
                    std::invalid_argument);
  }
  SUBCASE("every ground message lies in exactly L request sets") {
    const std::vector<std::vector<MsgSet>> levels = {
        {set_of({1, 2, 3, 4})}, {set_of({1, 2}), set_of({3, 4})}, {set_of({1}), set_of({2}), set_of({3}), set_of({4})}};
    const auto inst = partition_class_instance(5, levels);
    const int L = static_cast<int>(levels.size());
    for (int j = 1; j <= 4; ++j) {
      int count = 0;
      for (int i = 1; i <= inst.n(); ++i)
        if (has_msg(inst.request_mask(i), j)) ++count;
      CHECK(count == L);
    }
  }
}

TEST_CASE("random instances") {
  SUBCASE("n forcing every proper subset") {
    const auto inst = random_instance(3, 7, 42);
    CHECK(inst.n() == 7);
    CHECK(inst.clients == proper_subsets_canonical(3));
  }
  SUBCASE("deterministic per seed") {
    CHECK(random_instance(4, 5, 1) == random_instance(4, 5, 1));
    CHECK(random_instance(4, 5, 1) != random_instance(4, 5, 2));
  }
  SUBCASE("too many clients requested") { CHECK_THROWS_AS(random_instance(2, 4, 0), std::invalid_argument); }
}

TEST_CASE("complete-sigma detection") {
  auto sig = detect_complete_sigma(complete_sigma(4, {0, 2}));
  REQUIRE(sig.has_value());
  CHECK(*sig == std::vector<int>{0, 2});
  CHECK(detect_complete_sigma(builtin_instance("example2")) == std::nullopt);
  auto singles = detect_complete_sigma(builtin_instance("singletons-3"));
  REQUIRE(singles.has_value());
  CHECK(*singles == std::vector<int>{1});
}

TEST_CASE("builtins") {
  CHECK(builtin_instance("example2").n() == 11);
  CHECK(builtin_instance("example2").m == 4);
  CHECK(builtin_instance("lemma1-demo").n() == 3);
  CHECK(builtin_instance("singletons-3").n() == 3);
  CHECK_THROWS_AS(builtin_instance("nope"), std::invalid_argument);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make_instance(0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, {set_of({1}), set_of({1})}), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, {full_set(3)}), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, {set_of({4})}), std::invalid_argument);
}

TEST_CASE("instance enumeration") {
  int count = 0;
  for_each_instance(3, 2, [&](const PicodInstance& inst) {
    CHECK(inst.n() == 2);
    ++count;
  });
  CHECK(count == 21);  // C(7, 2)
}
