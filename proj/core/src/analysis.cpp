#include "seaweed/analysis.hpp"

#include <numeric>

#include "seaweed/spectrum.hpp"

namespace seaweed {

UnbrokenResult is_unbroken_centered_half(const IntegerMultiset& s) {
  if (s.empty()) throw DomainError("unbrokenness is undefined for an empty spectrum");
  const auto lo = static_cast<std::int64_t>(s.min());
  const auto hi = static_cast<std::int64_t>(s.max());
  UnbrokenResult r;
  r.unbroken = hi - lo + 1 == static_cast<std::int64_t>(s.distinct());
  r.centered = r.unbroken && lo + hi == 1;
  return r;
}

bool is_unimodal(const std::vector<std::int64_t>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

bool is_unimodal(const IntegerMultiset& s) { return is_unimodal(s.multiplicities()); }

bool is_log_concave(const std::vector<std::int64_t>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  }
  return true;
}

bool is_log_concave(const IntegerMultiset& s) { return is_log_concave(s.multiplicities()); }

bool is_symmetric_about_half(const IntegerMultiset& s) {
  for (const auto& [value, count] : s.counts()) {
    if (s.count(1 - value) != count) return false;
  }
  return true;
}

nlohmann::ordered_json SpectrumReport::to_json() const {
  nlohmann::ordered_json j;
  j["spec"] = spec;
  j["spectrum"] = seaweed::to_json(spectrum);
  j["unbroken"] = unbroken;
  j["centered_half"] = centered_half;
  j["unimodal"] = unimodal;
  j["log_concave"] = log_concave;
  j["symmetric_about_half"] = symmetric_about_half;
  return j;
}

SpectrumReport SpectrumReport::from_json(const nlohmann::json& j) {
  SpectrumReport r;
  r.spec = j.at("spec").get<std::string>();
  r.spectrum = multiset_from_json(j.at("spectrum"));
  r.unbroken = j.at("unbroken").get<bool>();
  r.centered_half = j.at("centered_half").get<bool>();
  r.unimodal = j.at("unimodal").get<bool>();
  r.log_concave = j.at("log_concave").get<bool>();
  r.symmetric_about_half = j.at("symmetric_about_half").get<bool>();
  return r;
}

SpectrumReport make_report(const SeaweedSpec& spec, IntegerMultiset spectrum) {
  SpectrumReport r;
  r.spec = spec.to_string();
  if (!spectrum.empty()) {
    const auto ub = is_unbroken_centered_half(spectrum);
    r.unbroken = ub.unbroken;
    r.centered_half = ub.centered;
  }
  r.unimodal = is_unimodal(spectrum);
  r.log_concave = is_log_concave(spectrum);
  r.symmetric_about_half = is_symmetric_about_half(spectrum);
  r.spectrum = std::move(spectrum);
  return r;
}

SpectrumReport analyze(const SeaweedSpec& spec) { return make_report(spec, spectrum(spec)); }

bool verify_swap_lemma(const SeaweedSpec& spec) {
  const FrobeniusSeaweed g1(spec);
  const FrobeniusSeaweed g2(spec.swapped());
  return g1.spectrum_matrix() == g2.spectrum_matrix().transposed() &&
         g1.extended_spectrum_matrix() == g2.extended_spectrum_matrix().transposed();
}

bool verify_reverse_lemma(const SeaweedSpec& spec) {
  const FrobeniusSeaweed g1(spec);
  const FrobeniusSeaweed g2(spec.reversed());
  return g1.extended_spectrum_matrix() == g2.extended_spectrum_matrix().antitransposed();
}

namespace {

IntegerMultiset shifted(const IntegerMultiset& s, int by) {
  IntegerMultiset out;
  for (const auto& [value, count] : s.counts()) out.add(value + by, count);
  return out;
}

SeaweedSpec two_over_one(int a, int b) {
  return SeaweedSpec(Composition({a, b}), Composition({a + b}));
}

BlockCheck make_check(std::string name, IntegerMultiset lhs, IntegerMultiset rhs) {
  BlockCheck c;
  c.name = std::move(name);
  c.applicable = true;
  c.holds = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

}  // namespace

bool BlockLemmaResult::all_hold() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

BlockLemmaResult check_block_lemmas(int k1, int k2, int m) {
  if (k1 < 1 || k2 < 1 || m < 1) throw DomainError("block lemmas need k1, k2, m >= 1");
  if (std::gcd(k1, k2) != 1) {
    throw DomainError("block lemmas need gcd(k1, k2) = 1, got gcd(" + std::to_string(k1) + ", " +
                      std::to_string(k2) + ") = " + std::to_string(std::gcd(k1, k2)));
  }
  const int h = m * k1 + k2;  // size of the head block
  BlockLemmaResult result{two_over_one(h, k1), two_over_one(h - k1, k1), {}};
  const FrobeniusSeaweed g1(result.big);
  const FrobeniusSeaweed g2(result.small);
  const auto sigma1 = g1.spectrum_matrix();
  const auto sigma2 = g2.spectrum_matrix();

  result.checks.push_back(make_check("top-left", sigma1.block_values(1, h, 1, h),
                                     g2.extended_spectrum_matrix().values()));

  const auto top_right = sigma1.block_values(1, h, h + 1, h + k1);
  if (k1 > k2) {
    const FrobeniusSeaweed g3(two_over_one(k1 - k2, k2));
    result.checks.push_back(make_check("bottom-right", sigma1.block_values(h + 1, h + k1, h + 1, h + k1),
                                       g3.extended_spectrum_matrix().values()));
    result.checks.push_back(
        make_check("top-right", top_right, shifted(sigma2.block_values(1, h, h - k1 + 1, h), 1)));
    if (m == 1) {
      const FrobeniusSeaweed g4(two_over_one(k1, k2));
      result.checks.push_back(make_check("top-right base", top_right,
                                         shifted(g4.spectrum_matrix().block_values(1, k1, 1, k1 + k2), 1)));
    }
  } else {
    for (const char* name : {"bottom-right", "top-right"}) {
      BlockCheck skipped;
      skipped.name = name;
      result.checks.push_back(skipped);
    }
  }
  return result;
}

bool verify_block_lemmas(int k1, int k2, int m) { return check_block_lemmas(k1, k2, m).all_hold(); }

}  // namespace seaweed
