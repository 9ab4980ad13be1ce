#include <catch_amalgamated.hpp>

#include "seaweed/analysis.hpp"
#include "seaweed/families.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

TEST_CASE("family names round-trip") {
  for (const auto f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("k-2r+1") == FamilyId::K2RPlus1);
  CHECK_FALSE(parse_family("k3").has_value());
}

TEST_CASE("family_spec") {
  CHECK(family_spec(FamilyId::K2, 5).to_string() == "5|2 / 7");
  CHECK(family_spec(FamilyId::TwosR1, 1, 3).to_string() == "2|2|2|1 / 7");
  CHECK(family_spec(FamilyId::K4R, 1, 1).to_string() == "1|4 / 3|2");
  CHECK(family_spec(FamilyId::K2R, 3, 2).to_string() == "3|2|2 / 4|2|1");
  CHECK(family_spec(FamilyId::K4RPlus2, 5, 2).to_string() == "5|4|4|2 / 7|4|4");
  CHECK(family_spec(FamilyId::TwoK11, 2).to_string() == "4|1|1 / 6");
  CHECK_THROWS_AS(family_spec(FamilyId::K2, 4), DomainError);
  CHECK_THROWS_WITH(family_spec(FamilyId::K2, 4), Catch::Matchers::ContainsSubstring("odd"));
  CHECK_THROWS_AS(family_spec(FamilyId::K2, 1), DomainError);
  CHECK_THROWS_AS(family_spec(FamilyId::K2K, 2), DomainError);
  CHECK_THROWS_AS(family_spec(FamilyId::K4R, 3, 0), DomainError);
  CHECK_THROWS_AS(family_spec(FamilyId::K1, 0), DomainError);
}

TEST_CASE("family_spectrum anchors") {
  CHECK(family_spectrum(FamilyId::K2, 3) == IntegerMultiset{{-2, 1}, {-1, 3}, {0, 5}, {1, 5}, {2, 3}, {3, 1}});
  CHECK(family_spectrum(FamilyId::K2K, 7) ==
        IntegerMultiset{{-5, 1}, {-4, 4}, {-3, 10}, {-2, 19}, {-1, 28}, {0, 34},
                        {1, 34}, {2, 28}, {3, 19}, {4, 10}, {5, 4}, {6, 1}});
  CHECK(family_spectrum(FamilyId::TwosR1, 1, 1) == IntegerMultiset{{-1, 1}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(family_extended_spectrum(FamilyId::K1, 1) == IntegerMultiset{{-1, 1}, {0, 1}, {1, 1}});
  CHECK(family_extended_spectrum(FamilyId::K2, 3) ==
        IntegerMultiset{{-3, 1}, {-2, 3}, {-1, 5}, {0, 6}, {1, 5}, {2, 3}, {3, 1}});
  CHECK(family_extended_spectrum(FamilyId::K1, 3) ==
        IntegerMultiset{{0, 3}, {-3, 1}, {3, 1}, {-2, 2}, {2, 2}, {-1, 3}, {1, 3}});
  CHECK(family_extended_spectrum(FamilyId::K1, 3) == extended_spectrum(parse_seaweed("3|1 / 4")));
  CHECK_THROWS_AS(family_extended_spectrum(FamilyId::K1K, 2), DomainError);
}

TEST_CASE("twos_r1 recurrence") {
  CHECK(twos_r1_multiplicities(1) == std::pair<std::int64_t, std::int64_t>{2, 1});
  for (int r = 1; r <= 10; ++r) {
    const auto [a, b] = twos_r1_multiplicities(r);
    CHECK(a > b);
  }
}

TEST_CASE("extend_with_2s and extend_with_4s") {
  const auto s = spectrum(parse_seaweed("3|1 / 4"));
  CHECK(extend_with_2s(s, 2, TwosVariant::RTwos) ==
        IntegerMultiset{{-2, 1}, {-1, 2}, {0, 6}, {1, 6}, {2, 2}, {3, 1}});
  CHECK(extend_with_2s({}, 1, TwosVariant::RTwos) == IntegerMultiset{{0, 1}, {1, 1}});
  CHECK(extend_with_2s(IntegerMultiset{{0, 2}, {1, 2}}, 1, TwosVariant::RTwosPlusOne) ==
        IntegerMultiset{{0, 4}, {1, 4}});
  CHECK(spectrum(parse_seaweed("2|1 / 1|2")) == IntegerMultiset{{0, 2}, {1, 2}});
  CHECK(spectrum(parse_seaweed("2|2|1 / 1|2|2")) == IntegerMultiset{{0, 4}, {1, 4}});
  CHECK(spectrum(parse_seaweed("1|2|1 / 2|2")) == IntegerMultiset{{0, 3}, {1, 3}});
  CHECK(extend_with_4s(spectrum(parse_seaweed("5|2 / 7")), 2, FoursVariant::RFoursPlusTwo) ==
        IntegerMultiset{{-3, 1}, {-2, 3}, {-1, 10}, {0, 21}, {1, 21}, {2, 10}, {3, 3}, {4, 1}});
  CHECK(extend_with_4s({}, 1, FoursVariant::RFours) == IntegerMultiset{{-1, 1}, {0, 3}, {1, 3}, {2, 1}});
  CHECK(extend_with_4s(spectrum(parse_seaweed("1|2 / 3")), 1, FoursVariant::RFours) ==
        spectrum(parse_seaweed("1|4 / 3|2")));
}

TEST_CASE("appended tails") {
  const auto base = parse_seaweed("3|1 / 4");
  CHECK(append_twos(base, 2, TwosVariant::RTwos).to_string() == "3|2|2 / 4|2|1");
  CHECK(append_twos(base, 1, TwosVariant::RTwosPlusOne).to_string() == "3|2|1 / 4|2");
  CHECK(append_fours(parse_seaweed("5|2 / 7"), 2, FoursVariant::RFoursPlusTwo).to_string() == "5|4|4|2 / 7|4|4");
  CHECK_THROWS_AS(append_fours(base, 1, FoursVariant::RFours), DomainError);
}

TEST_CASE("formulas agree with the engine") {
  for (const auto f : kAllFamilies) {
    const int k_hi = family_uses_k(f) ? 13 : 1;
    const int r_hi = family_uses_r(f) ? 4 : 1;
    for (int k = 1; k <= k_hi; ++k) {
      for (int r = 1; r <= r_hi; ++r) {
        try {
          check_family_domain(f, k, r);
        } catch (const DomainError&) {
          continue;
        }
        INFO(family_name(f) << " k=" << k << " r=" << r);
        const auto spec = family_spec(f, k, r);
        const FrobeniusSeaweed g(spec);
        const auto formula = family_spectrum(f, k, r);
        CHECK(formula == g.spectrum());
        CHECK(static_cast<std::size_t>(formula.size()) == g.mask().count() - 1);
        if (family_has_extended(f)) CHECK(family_extended_spectrum(f, k) == g.extended_spectrum());
      }
    }
  }
}

TEST_CASE("adding 2s and 4s to engine spectra of small bases") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& base : enumerate_frobenius(n)) {
      const int last = base.top().parts().back();
      if (last > 2) continue;
      const auto s = spectrum(base);
      for (int r = 1; r <= 3; ++r) {
        INFO(base.to_string() << " r=" << r);
        if (last == 1) {
          CHECK(spectrum(append_twos(base, r, TwosVariant::RTwos)) == extend_with_2s(s, r, TwosVariant::RTwos));
          CHECK(spectrum(append_twos(base, r, TwosVariant::RTwosPlusOne)) ==
                extend_with_2s(s, r, TwosVariant::RTwosPlusOne));
        } else {
          CHECK(spectrum(append_fours(base, r, FoursVariant::RFours)) == extend_with_4s(s, r, FoursVariant::RFours));
          CHECK(spectrum(append_fours(base, r, FoursVariant::RFoursPlusTwo)) ==
                extend_with_4s(s, r, FoursVariant::RFoursPlusTwo));
        }
      }
    }
  }
}
