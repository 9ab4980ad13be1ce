#pragma once

// Spectral property predicates and checks of the symmetry and block lemmas.

#include <string>
#include <vector>

#include <json.hpp>

#include "seaweed/core.hpp"

namespace seaweed {

struct UnbrokenResult {
  bool unbroken = false;
  bool centered = false;  // only meaningful when unbroken
};

/// Distinct values form an integer interval [lo, hi], and lo + hi == 1.
/// Throws DomainError on an empty multiset.
UnbrokenResult is_unbroken_centered_half(const IntegerMultiset& s);

/// Multiplicities in ascending value order rise then fall. Empty is true.
bool is_unimodal(const IntegerMultiset& s);
bool is_unimodal(const std::vector<std::int64_t>& seq);

/// a_i^2 >= a_{i-1} a_{i+1} for every interior i.
bool is_log_concave(const IntegerMultiset& s);
bool is_log_concave(const std::vector<std::int64_t>& seq);

/// m(e) == m(1 - e) for every e.
bool is_symmetric_about_half(const IntegerMultiset& s);

struct SpectrumReport {
  std::string spec;
  IntegerMultiset spectrum;
  bool unbroken = true;
  bool centered_half = true;
  bool unimodal = true;
  bool log_concave = true;
  bool symmetric_about_half = true;

  nlohmann::ordered_json to_json() const;
  static SpectrumReport from_json(const nlohmann::json& j);
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// An empty spectrum (n = 1) is reported as vacuously unbroken and centered.
SpectrumReport make_report(const SeaweedSpec& spec, IntegerMultiset spectrum);
/// Throws NotFrobeniusError for non-Frobenius specs.
SpectrumReport analyze(const SeaweedSpec& spec);

/// Sigma(a/b) == Sigma(b/a)^t and likewise for the extended matrices.
bool verify_swap_lemma(const SeaweedSpec& spec);
/// Extended matrix of a/b equals the antidiagonal transpose of that of
/// rev(a)/rev(b).
bool verify_reverse_lemma(const SeaweedSpec& spec);

struct BlockCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
  IntegerMultiset lhs;
  IntegerMultiset rhs;
};

struct BlockLemmaResult {
  SeaweedSpec big;    // mk1+k2|k1 / (m+1)k1+k2
  SeaweedSpec small;  // (m-1)k1+k2|k1 / mk1+k2
  std::vector<BlockCheck> checks;
  bool all_hold() const;
};

/// Top-left, bottom-right and top-right block multiset identities for
/// mk1+k2|k1 / (m+1)k1+k2. The last two apply only when k1 > k2; at m = 1 the
/// top-right block is also compared with the k1|k2 / k1+k2 form.
/// Throws DomainError unless gcd(k1, k2) == 1 and k1, k2, m >= 1.
BlockLemmaResult check_block_lemmas(int k1, int k2, int m);
bool verify_block_lemmas(int k1, int k2, int m);

}  // namespace seaweed
