#include <catch_amalgamated.hpp>

#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

namespace {

SeaweedSpec sw(const char* text) { return parse_seaweed(text); }

std::vector<DirectedEdge> directed(std::initializer_list<DirectedEdge> e) { return e; }

// Every Frobenius spec with n <= max_n.
std::vector<SeaweedSpec> frobenius_up_to(int max_n) {
  std::vector<SeaweedSpec> out;
  for (int n = 1; n <= max_n; ++n) {
    auto specs = enumerate_frobenius(n);
    out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

}  // namespace

TEST_CASE("orient") {
  CHECK(orient(build_meander(sw("2|4 / 1|2|3"))).edges() ==
        directed({{2, 1}, {2, 3}, {4, 6}, {5, 4}, {6, 3}}));
  CHECK(orient(build_meander(sw("1|1 / 2"))).edges() == directed({{1, 2}}));
  CHECK(orient(build_meander(sw("2|1 / 3"))).edges() == directed({{1, 3}, {2, 1}}));
}

TEST_CASE("vertex_potentials") {
  auto phi = [](const char* s) { return vertex_potentials(orient(build_meander(sw(s)))).values(); };
  CHECK(phi("1|1 / 2") == std::vector<int>{1, 0});
  CHECK(phi("2|1 / 3") == std::vector<int>{1, 2, 0});
  CHECK(phi("2|4 / 1|2|3") == std::vector<int>{-1, 0, -1, 1, 2, 0});
  const auto p = vertex_potentials(orient(build_meander(sw("2|4 / 1|2|3"))));
  CHECK(p.weight(1, 5) == -3);
  CHECK_THROWS_AS(vertex_potentials(orient(build_meander(sw("2 / 2")))), NotFrobeniusError);
  CHECK_THROWS_WITH(vertex_potentials(orient(build_meander(sw("2 / 2")))),
                    Catch::Matchers::ContainsSubstring("spectrum undefined: meander is not a single path"));
}

TEST_CASE("shape_mask") {
  const auto m = shape_mask(sw("2|4 / 1|2|3"));
  CHECK(m.admits(5, 3));
  CHECK_FALSE(m.admits(1, 3));
  CHECK(m.count() == 17);
  const auto full = shape_mask(sw("5 / 5"));
  CHECK(full.count() == 25);
  const auto upper = shape_mask(sw("1|1 / 2"));
  CHECK(upper.count() == 3);
  CHECK(upper.admits(1, 2));
  CHECK_FALSE(upper.admits(2, 1));
}

TEST_CASE("spectrum_matrix of 2|4 / 1|2|3 matches the figure") {
  const auto m = spectrum_matrix(sw("2|4 / 1|2|3"));
  CHECK(m.to_text() ==
        "0 · · · · ·\n"
        "1 0 1 · · ·\n"
        "· · 0 · · ·\n"
        "· · 2 0 -1 1\n"
        "· · 3 1 0 2\n"
        "· · 1 -1 -2 0\n");
  CHECK_THROWS_AS(m.at(1, 3), std::out_of_range);
}

TEST_CASE("spectrum_matrix of 5|2 / 7") {
  const auto m = spectrum_matrix(sw("5|2 / 7"));
  CHECK(m.at(3, 6) == 4);
  CHECK(m.to_text() ==
        "0 1 -2 0 -1 2 1\n"
        "-1 0 -3 -1 -2 1 0\n"
        "2 3 0 2 1 4 3\n"
        "0 1 -2 0 -1 2 1\n"
        "1 2 -1 1 0 3 2\n"
        "· · · · · 0 -1\n"
        "· · · · · 1 0\n");
  CHECK(spectrum_matrix(sw("1 / 1")).to_text() == "0\n");
}

TEST_CASE("extended spectrum matrix") {
  CHECK(extended_spectrum_matrix(sw("1|1 / 2")).to_text() == "0 1\n-1 0\n");
  const auto m = extended_spectrum_matrix(sw("2|4 / 1|2|3"));
  CHECK(m.defined_count() == 36);
  CHECK(m.at(1, 5) == -3);
}

TEST_CASE("spectra") {
  CHECK(spectrum(sw("2|4 / 1|2|3")) == IntegerMultiset{{-2, 1}, {-1, 2}, {0, 5}, {1, 5}, {2, 2}, {3, 1}});
  CHECK(spectrum(sw("5|2 / 7")) ==
        IntegerMultiset{{-3, 1}, {-2, 3}, {-1, 6}, {0, 9}, {1, 9}, {2, 6}, {3, 3}, {4, 1}});
  CHECK(spectrum(sw("1 / 1")).empty());
  CHECK(extended_spectrum(sw("2|4 / 1|2|3")) ==
        IntegerMultiset{{-3, 2}, {-2, 4}, {-1, 7}, {0, 9}, {1, 7}, {2, 4}, {3, 2}});
  CHECK(extended_spectrum(sw("1|1 / 2")) == IntegerMultiset{{-1, 1}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(spectrum(sw("2 / 2")), NotFrobeniusError);
  CHECK_THROWS_AS(extended_spectrum(sw("2 / 2")), NotFrobeniusError);
  CHECK_THROWS_AS(principal_element(sw("2 / 2")), NotFrobeniusError);
  CHECK_THROWS_AS(frobenius_form_support(sw("2 / 2")), NotFrobeniusError);
}

TEST_CASE("principal element") {
  const auto pe = principal_element(sw("1|1 / 2"));
  CHECK(pe.diag == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  CHECK(pe.trace() == Rational(0));
}

TEST_CASE("frobenius form support") {
  CHECK(frobenius_form_support(sw("2|4 / 1|2|3")) ==
        directed({{2, 1}, {2, 3}, {4, 6}, {5, 4}, {6, 3}}));
  CHECK(frobenius_form_support(sw("1|1 / 2")) == directed({{1, 2}}));
}

TEST_CASE("spectral invariants on every Frobenius spec with n <= 8") {
  for (const auto& spec : frobenius_up_to(8)) {
    const FrobeniusSeaweed g(spec);
    const int n = spec.n();
    const auto& phi = g.potential();
    const auto sigma = g.spectrum_matrix();
    const auto ext = g.extended_spectrum_matrix();

    bool additive = true;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        additive = additive && phi.weight(i, j) == -phi.weight(j, i);
        for (int k = 1; k <= n; ++k) {
          additive = additive && phi.weight(i, j) + phi.weight(j, k) == phi.weight(i, k);
        }
        additive = additive && ext.at(i, j) + ext.at(j, i) == 0;
      }
      additive = additive && sigma.at(i, i) == 0;
    }
    CHECK(additive);

    CHECK(static_cast<std::size_t>(g.spectrum().size()) == g.mask().count() - 1);
    CHECK(g.extended_spectrum().size() == static_cast<std::int64_t>(n) * n - 1);

    const auto support = g.frobenius_form_support();
    CHECK(support.size() == static_cast<std::size_t>(n - 1));
    const auto pe = g.principal_element();
    CHECK(pe.trace() == Rational(0));
    for (const auto& e : support) {
      CHECK(sigma.at(e.from, e.to) == 1);
      CHECK(pe.diag[e.from - 1] - pe.diag[e.to - 1] == Rational(1));
    }
    bool eigen = true;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (sigma.defined(i, j)) eigen = eigen && pe.diag[i - 1] - pe.diag[j - 1] == Rational(sigma.at(i, j));
      }
    }
    CHECK(eigen);
  }
}

TEST_CASE("Rational") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}
