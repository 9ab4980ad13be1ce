#pragma once

// Closed-form spectra of the seaweed families with known formulas, the
// seaweeds they describe, and the add-2s / add-4s spectrum transforms.

#include <optional>
#include <string_view>
#include <vector>

#include "seaweed/core.hpp"

namespace seaweed {

enum class FamilyId {
  K1,         // k|1 / k+1
  K2,         // k|2 / k+2, k odd >= 3
  K1K,        // k+1|k / 2k+1
  K2K,        // k+2|k / 2k+2, k odd
  TwoK1_12K,  // 2k|1 / 1|2k
  TwoK11,     // 2k|1|1 / 2k+2
  K2R,        // k|2^r / k+1|2^(r-1)|1
  K2RPlus1,   // k|2^r|1 / k+1|2^r
  TwosR1,     // 2^r|1 / 2r+1
  K4R,        // k|4^r / k+2|4^(r-1)|2, k odd
  K4RPlus2,   // k|4^r|2 / k+2|4^r, k odd
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::K1,     FamilyId::K2,  FamilyId::K1K,      FamilyId::K2K,
    FamilyId::TwoK1_12K, FamilyId::TwoK11, FamilyId::K2R, FamilyId::K2RPlus1,
    FamilyId::TwosR1, FamilyId::K4R, FamilyId::K4RPlus2,
};

/// Stable lowercase identifier: k1, k2, k1k, k2k, 2k1-12k, 2k11, k-2r,
/// k-2r+1, 2s-r1, k-4r, k-4r+2.
std::string_view family_name(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view name);

/// Whether the family is parametrized by k and/or r.
bool family_uses_k(FamilyId f);
bool family_uses_r(FamilyId f);
/// Families whose extended spectrum has a closed form (K1, K2).
bool family_has_extended(FamilyId f);

/// Throws DomainError naming the violated constraint. Unused parameters are
/// not checked.
void check_family_domain(FamilyId f, int k, int r);

SeaweedSpec family_spec(FamilyId f, int k, int r = 1);
IntegerMultiset family_spectrum(FamilyId f, int k, int r = 1);
/// Throws DomainError for families without an extended formula.
IntegerMultiset family_extended_spectrum(FamilyId f, int k);

/// (a_r, b_r) of the 2|...|2|1 / 2r+1 spectrum {-1^b, 0^a, 1^a, 2^b}.
std::pair<std::int64_t, std::int64_t> twos_r1_multiplicities(int r);

enum class TwosVariant { RTwos, RTwosPlusOne };
enum class FoursVariant { RFours, RFoursPlusTwo };

/// S plus {0^c, 1^c} with c = 2r-1 (RTwos) or 2r (RTwosPlusOne).
IntegerMultiset extend_with_2s(const IntegerMultiset& s, int r, TwosVariant variant);
/// S plus {-1^c, 0^3c, 1^3c, 2^c} with c = 2r-1 (RFours) or 2r (RFoursPlusTwo).
IntegerMultiset extend_with_4s(const IntegerMultiset& s, int r, FoursVariant variant);

/// The seaweeds the transforms describe: base a|1 / b becomes
/// a|2^r / b|2^(r-1)|1 or a|2^r|1 / b|2^r (and likewise with 4s and a
/// trailing 2). The base's last top part must be 1 (resp. 2).
SeaweedSpec append_twos(const SeaweedSpec& base, int r, TwosVariant variant);
SeaweedSpec append_fours(const SeaweedSpec& base, int r, FoursVariant variant);

/// General form for a base whose last top part is k: a|(2k)^r / b|(2k)^(r-1)|k
/// (`plus_k` false) or a|(2k)^r|k / b|(2k)^r (`plus_k` true).
SeaweedSpec append_doubled_tail(const SeaweedSpec& base, int r, bool plus_k);

}  // namespace seaweed
