#include <catch_amalgamated.hpp>

#include <random>

#include "seaweed/core.hpp"

using namespace seaweed;

TEST_CASE("parse_composition") {
  const auto c = parse_composition("1|2|3");
  CHECK(c.parts() == std::vector<int>{1, 2, 3});
  CHECK(c.n() == 6);
  CHECK(parse_composition("7").n() == 7);
  CHECK_THROWS_AS(parse_composition("2|0|1"), ParseError);
  CHECK_THROWS_AS(parse_composition(""), ParseError);
  CHECK_THROWS_AS(parse_composition("1|x"), ParseError);
  CHECK_THROWS_AS(parse_composition("1|-2"), ParseError);
  CHECK_THROWS_WITH(parse_composition("2|0|1"), Catch::Matchers::ContainsSubstring("0"));
}

TEST_CASE("parse_seaweed") {
  const auto s = parse_seaweed("2|4 / 1|2|3");
  CHECK(s.top().parts() == std::vector<int>{2, 4});
  CHECK(s.bottom().parts() == std::vector<int>{1, 2, 3});
  CHECK(s.n() == 6);
  CHECK(parse_seaweed("  5|2/7 ").to_string() == "5|2 / 7");
  CHECK_THROWS_AS(parse_seaweed("3|1 / 3"), ParseError);
  CHECK_THROWS_WITH(parse_seaweed("3|1 / 3"), Catch::Matchers::ContainsSubstring("4") &&
                                                  Catch::Matchers::ContainsSubstring("3"));
  CHECK_THROWS_AS(parse_seaweed("3|1"), ParseError);
  CHECK_THROWS_AS(parse_seaweed("1 / 1 / 1"), ParseError);
}

TEST_CASE("swapped and reversed") {
  const auto s = parse_seaweed("2|4 / 1|2|3");
  CHECK(s.swapped().to_string() == "1|2|3 / 2|4");
  CHECK(s.reversed().to_string() == "4|2 / 3|2|1");
}

TEST_CASE("canonical text round-trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto comps = compositions_of(n);
    const auto& c = comps[rng() % comps.size()];
    CHECK(parse_composition(c.to_string()) == c);
  }
}

TEST_CASE("compositions_of") {
  CHECK(compositions_of(1) == std::vector<Composition>{Composition({1})});
  const auto three = compositions_of(3);
  REQUIRE(three.size() == 4);
  CHECK(three[0] == Composition({3}));
  CHECK(three[3] == Composition({1, 1, 1}));
  for (int n = 1; n <= 12; ++n) {
    const auto all = compositions_of(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    std::set<std::vector<int>> distinct;
    for (const auto& c : all) {
      CHECK(c.n() == n);
      distinct.insert(c.parts());
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK(compositions_of(10).size() == 512);
  CHECK_THROWS_AS(compositions_of(0), DomainError);
}

TEST_CASE("IntegerMultiset basics") {
  IntegerMultiset s;
  CHECK(s.empty());
  s.add(1, 2);
  s.add(-1);
  s.add(1);
  CHECK(s.count(1) == 3);
  CHECK(s.size() == 4);
  CHECK(s.distinct() == 2);
  s.remove(1, 3);
  CHECK(s.count(1) == 0);
  CHECK(s.distinct() == 1);
  CHECK_THROWS_AS(s.remove(5), DomainError);
  CHECK(IntegerMultiset{{0, 2}, {1, 2}}.is_submultiset_of(IntegerMultiset{{0, 3}, {1, 2}, {2, 1}}));
  CHECK_FALSE(IntegerMultiset{{0, 2}}.is_submultiset_of(IntegerMultiset{{0, 1}}));
}

TEST_CASE("multiset_equal") {
  CHECK(multiset_equal(IntegerMultiset{{0, 1}, {1, 1}}, IntegerMultiset{{1, 1}, {0, 1}}));
  CHECK_FALSE(multiset_equal(IntegerMultiset{{0, 2}}, IntegerMultiset{{0, 1}}));
  CHECK(multiset_equal({}, {}));
}

TEST_CASE("multiset_equal is an equivalence on random multisets") {
  std::mt19937 rng(11);
  auto random_multiset = [&] {
    IntegerMultiset s;
    const int values = static_cast<int>(rng() % 4);
    for (int i = 0; i < values; ++i) s.add(static_cast<int>(rng() % 3) - 1, 1 + rng() % 2);
    return s;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_multiset();
    const auto y = random_multiset();
    const auto z = random_multiset();
    CHECK(multiset_equal(x, x));
    CHECK(multiset_equal(x, y) == multiset_equal(y, x));
    if (multiset_equal(x, y) && multiset_equal(y, z)) CHECK(multiset_equal(x, z));
  }
}

TEST_CASE("exponent notation") {
  const IntegerMultiset s{{-2, 1}, {-1, 2}, {0, 5}, {1, 5}, {2, 2}, {3, 1}};
  CHECK(s.to_exponent_string() == "{-2, -1^2, 0^5, 1^5, 2^2, 3}");
  CHECK(parse_exponent_multiset(s.to_exponent_string()) == s);
  CHECK(IntegerMultiset{}.to_exponent_string() == "{}");
  CHECK(parse_exponent_multiset("{}").empty());
}

TEST_CASE("json encoding") {
  const IntegerMultiset s{{-10, 1}, {-2, 3}, {0, 1}, {1, 1}};
  CHECK(to_json(s).dump() == R"({"-10":1,"-2":3,"0":1,"1":1})");
  CHECK(multiset_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
}
