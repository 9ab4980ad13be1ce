#include "seaweed/families.hpp"

#include <array>
#include <string>

namespace seaweed {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  bool uses_k;
  bool uses_r;
};

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {FamilyId::K1, "k1", true, false},
    {FamilyId::K2, "k2", true, false},
    {FamilyId::K1K, "k1k", true, false},
    {FamilyId::K2K, "k2k", true, false},
    {FamilyId::TwoK1_12K, "2k1-12k", true, false},
    {FamilyId::TwoK11, "2k11", true, false},
    {FamilyId::K2R, "k-2r", true, true},
    {FamilyId::K2RPlus1, "k-2r+1", true, true},
    {FamilyId::TwosR1, "2s-r1", false, true},
    {FamilyId::K4R, "k-4r", true, true},
    {FamilyId::K4RPlus2, "k-4r+2", true, true},
}};

const FamilyInfo& info(FamilyId f) {
  for (const auto& entry : kFamilies) {
    if (entry.id == f) return entry;
  }
  throw DomainError("unknown family");
}

std::vector<int> repeat(int value, int times) { return std::vector<int>(std::max(times, 0), value); }

std::vector<int> concat(std::initializer_list<std::vector<int>> pieces) {
  std::vector<int> out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return out;
}

SeaweedSpec make(std::vector<int> top, std::vector<int> bottom) {
  return SeaweedSpec(Composition(std::move(top)), Composition(std::move(bottom)));
}

// Adds {low^c, high^c}; the symmetric pairs every formula is built from.
void add_pair(IntegerMultiset& s, int low, int high, std::int64_t c) {
  s.add(low, c);
  s.add(high, c);
}

IntegerMultiset k1_spectrum(int k) {
  IntegerMultiset s;
  for (int i = 1; i <= k; ++i) add_pair(s, -k + i, k - i + 1, i);
  return s;
}

IntegerMultiset k1_extended(int k) {
  IntegerMultiset s;
  s.add(0, k);
  for (int i = 0; i <= k - 1; ++i) add_pair(s, -k + i, k - i, i + 1);
  return s;
}

IntegerMultiset k2_spectrum(int k) {
  if (k == 3) return {{-2, 1}, {-1, 3}, {0, 5}, {1, 5}, {2, 3}, {3, 1}};
  const int m = (k + 1) / 2;
  IntegerMultiset s;
  add_pair(s, -m, m + 1, 1);
  add_pair(s, -m + 1, m, 3);
  add_pair(s, 0, 1, 2 * k - 1);
  for (int i = 2; i <= m - 1; ++i) add_pair(s, -m + i, m - i + 1, 4 * i - 2);
  return s;
}

IntegerMultiset k2_extended(int k) {
  if (k == 3) return {{-3, 1}, {-2, 3}, {-1, 5}, {0, 6}, {1, 5}, {2, 3}, {3, 1}};
  const int m = (k + 1) / 2;
  IntegerMultiset s;
  add_pair(s, -m - 1, m + 1, 1);
  add_pair(s, -m, m, 3);
  add_pair(s, -1, 1, 2 * k - 1);
  s.add(0, 2 * k);
  for (int i = 1; i <= m - 2; ++i) add_pair(s, -m + i, m - i, 4 * i + 2);
  return s;
}

IntegerMultiset k1k_spectrum(int k) {
  if (k == 1) return {{-1, 1}, {0, 2}, {1, 2}, {2, 1}};
  IntegerMultiset s;
  add_pair(s, -k, k + 1, 1);
  add_pair(s, 0, 1, 3 * k - 1);
  for (int i = 1; i <= k - 1; ++i) add_pair(s, -k + i, k - i + 1, 3 * i);
  return s;
}

IntegerMultiset k2k_spectrum(int k) {
  switch (k) {
    case 1:
      return {{-2, 1}, {-1, 2}, {0, 3}, {1, 3}, {2, 2}, {3, 1}};
    case 3:
      return {{-3, 1}, {-2, 4}, {-1, 8}, {0, 11}, {1, 11}, {2, 8}, {3, 4}, {4, 1}};
    case 5:
      return {{-4, 1}, {-3, 4}, {-2, 10}, {-1, 17}, {0, 22},
              {1, 22}, {2, 17}, {3, 10}, {4, 4},   {5, 1}};
    case 7:
      return {{-5, 1},  {-4, 4},  {-3, 10}, {-2, 19}, {-1, 28}, {0, 34},
              {1, 34},  {2, 28},  {3, 19},  {4, 10},  {5, 4},   {6, 1}};
    default:
      break;
  }
  const int m = (k + 1) / 2;
  IntegerMultiset s;
  add_pair(s, -m - 1, m + 2, 1);
  add_pair(s, -m, m + 1, 4);
  add_pair(s, -m + 1, m, 10);
  add_pair(s, -m + 2, m - 1, 19);
  add_pair(s, -1, 2, 6 * k - 14);
  add_pair(s, 0, 1, 6 * k - 8);
  for (int i = 1; i <= m - 4; ++i) add_pair(s, -m + i + 2, m - i - 1, 12 * i + 18);
  return s;
}

IntegerMultiset two_k1_12k_spectrum(int k) {
  IntegerMultiset s;
  for (int i = 1; i <= k; ++i) add_pair(s, -k + i, k - i + 1, 4 * i - 2);
  return s;
}

IntegerMultiset two_k11_spectrum(int k) {
  IntegerMultiset s;
  add_pair(s, -k, k + 1, 1);
  for (int i = 1; i <= k; ++i) add_pair(s, -k + i, k - i + 1, 4 * i);
  return s;
}

// k|2^r / k+1|2^(r-1)|1 and k|2^r|1 / k+1|2^r. The union term is
// (k-i+1)^i, matching the k|1 family the tail is appended to.
IntegerMultiset k2r_spectrum(int k, int r, bool plus_one) {
  IntegerMultiset s;
  add_pair(s, 0, 1, plus_one ? k + 2 * r : k + 2 * r - 1);
  for (int i = 1; i <= k - 1; ++i) add_pair(s, -k + i, k - i + 1, i);
  return s;
}

IntegerMultiset twos_r1_spectrum(int r) {
  const auto [a, b] = twos_r1_multiplicities(r);
  IntegerMultiset s;
  add_pair(s, -1, 2, b);
  add_pair(s, 0, 1, a);
  return s;
}

IntegerMultiset k4r_spectrum(int k, int r, bool plus_two) {
  IntegerMultiset s;
  if (k == 1) {
    add_pair(s, -1, 2, plus_two ? 2 * r + 1 : 2 * r);
    add_pair(s, 0, 1, plus_two ? 6 * r + 2 : 6 * r - 1);
    return s;
  }
  if (k == 3) {
    add_pair(s, -2, 3, 1);
    add_pair(s, -1, 2, plus_two ? 2 * r + 3 : 2 * r + 2);
    add_pair(s, 0, 1, plus_two ? 6 * r + 5 : 6 * r + 2);
    return s;
  }
  const int m = (k + 1) / 2;
  add_pair(s, -m, m + 1, 1);
  add_pair(s, -m + 1, m, 3);
  add_pair(s, -1, 2, plus_two ? 2 * (k + r) - 4 : 2 * (k + r) - 5);
  add_pair(s, 0, 1, plus_two ? 2 * (k + 3 * r) - 1 : 2 * (k + 3 * r) - 4);
  for (int i = 2; i <= m - 2; ++i) add_pair(s, -m + i, m - i + 1, 4 * i - 2);
  return s;
}

}  // namespace

std::string_view family_name(FamilyId f) { return info(f).name; }

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

bool family_uses_k(FamilyId f) { return info(f).uses_k; }
bool family_uses_r(FamilyId f) { return info(f).uses_r; }
bool family_has_extended(FamilyId f) { return f == FamilyId::K1 || f == FamilyId::K2; }

void check_family_domain(FamilyId f, int k, int r) {
  const auto name = std::string(family_name(f));
  if (family_uses_k(f) && k < 1) {
    throw DomainError(name + ": k must be >= 1, got " + std::to_string(k));
  }
  if (family_uses_r(f) && r < 1) {
    throw DomainError(name + ": r must be >= 1, got " + std::to_string(r));
  }
  switch (f) {
    case FamilyId::K2:
      if (k % 2 == 0 || k < 3) {
        throw DomainError(name + ": k must be odd and >= 3, got " + std::to_string(k));
      }
      break;
    case FamilyId::K2K:
    case FamilyId::K4R:
    case FamilyId::K4RPlus2:
      if (k % 2 == 0) throw DomainError(name + ": k must be odd, got " + std::to_string(k));
      break;
    default:
      break;
  }
}

SeaweedSpec family_spec(FamilyId f, int k, int r) {
  check_family_domain(f, k, r);
  switch (f) {
    case FamilyId::K1:
      return make({k, 1}, {k + 1});
    case FamilyId::K2:
      return make({k, 2}, {k + 2});
    case FamilyId::K1K:
      return make({k + 1, k}, {2 * k + 1});
    case FamilyId::K2K:
      return make({k + 2, k}, {2 * k + 2});
    case FamilyId::TwoK1_12K:
      return make({2 * k, 1}, {1, 2 * k});
    case FamilyId::TwoK11:
      return make({2 * k, 1, 1}, {2 * k + 2});
    case FamilyId::K2R:
      return make(concat({{k}, repeat(2, r)}), concat({{k + 1}, repeat(2, r - 1), {1}}));
    case FamilyId::K2RPlus1:
      return make(concat({{k}, repeat(2, r), {1}}), concat({{k + 1}, repeat(2, r)}));
    case FamilyId::TwosR1:
      return make(concat({repeat(2, r), {1}}), {2 * r + 1});
    case FamilyId::K4R:
      return make(concat({{k}, repeat(4, r)}), concat({{k + 2}, repeat(4, r - 1), {2}}));
    case FamilyId::K4RPlus2:
      return make(concat({{k}, repeat(4, r), {2}}), concat({{k + 2}, repeat(4, r)}));
  }
  throw DomainError("unknown family");
}

IntegerMultiset family_spectrum(FamilyId f, int k, int r) {
  check_family_domain(f, k, r);
  switch (f) {
    case FamilyId::K1:
      return k1_spectrum(k);
    case FamilyId::K2:
      return k2_spectrum(k);
    case FamilyId::K1K:
      return k1k_spectrum(k);
    case FamilyId::K2K:
      return k2k_spectrum(k);
    case FamilyId::TwoK1_12K:
      return two_k1_12k_spectrum(k);
    case FamilyId::TwoK11:
      return two_k11_spectrum(k);
    case FamilyId::K2R:
      return k2r_spectrum(k, r, false);
    case FamilyId::K2RPlus1:
      return k2r_spectrum(k, r, true);
    case FamilyId::TwosR1:
      return twos_r1_spectrum(r);
    case FamilyId::K4R:
      return k4r_spectrum(k, r, false);
    case FamilyId::K4RPlus2:
      return k4r_spectrum(k, r, true);
  }
  throw DomainError("unknown family");
}

IntegerMultiset family_extended_spectrum(FamilyId f, int k) {
  if (!family_has_extended(f)) {
    throw DomainError(std::string(family_name(f)) + ": no closed-form extended spectrum");
  }
  check_family_domain(f, k, 1);
  return f == FamilyId::K1 ? k1_extended(k) : k2_extended(k);
}

std::pair<std::int64_t, std::int64_t> twos_r1_multiplicities(int r) {
  if (r < 1) throw DomainError("2s-r1: r must be >= 1, got " + std::to_string(r));
  std::int64_t a = 2;
  std::int64_t b = 1;
  for (int j = 2; j <= r; ++j) {
    const std::int64_t ceil_half = (j + 1) / 2;      // ceil(j/2)
    const std::int64_t ceil_half_prev = j / 2;       // ceil((j-1)/2)
    b += ceil_half;
    a += j + ceil_half_prev + 1;
  }
  return {a, b};
}

IntegerMultiset extend_with_2s(const IntegerMultiset& s, int r, TwosVariant variant) {
  if (r < 1) throw DomainError("extend_with_2s: r must be >= 1");
  const std::int64_t c = variant == TwosVariant::RTwos ? 2 * r - 1 : 2 * r;
  IntegerMultiset out = s;
  add_pair(out, 0, 1, c);
  return out;
}

IntegerMultiset extend_with_4s(const IntegerMultiset& s, int r, FoursVariant variant) {
  if (r < 1) throw DomainError("extend_with_4s: r must be >= 1");
  const std::int64_t c = variant == FoursVariant::RFours ? 2 * r - 1 : 2 * r;
  IntegerMultiset out = s;
  add_pair(out, -1, 2, c);
  add_pair(out, 0, 1, 3 * c);
  return out;
}

SeaweedSpec append_doubled_tail(const SeaweedSpec& base, int r, bool plus_k) {
  if (r < 1) throw DomainError("tail length r must be >= 1");
  const auto& top = base.top().parts();
  const int k = top.back();
  std::vector<int> head(top.begin(), top.end() - 1);
  if (plus_k) {
    return make(concat({head, repeat(2 * k, r), {k}}),
                concat({base.bottom().parts(), repeat(2 * k, r)}));
  }
  return make(concat({head, repeat(2 * k, r)}),
              concat({base.bottom().parts(), repeat(2 * k, r - 1), {k}}));
}

SeaweedSpec append_twos(const SeaweedSpec& base, int r, TwosVariant variant) {
  if (base.top().parts().back() != 1) {
    throw DomainError("append_twos: base top must end in 1: " + base.to_string());
  }
  return append_doubled_tail(base, r, variant == TwosVariant::RTwosPlusOne);
}

SeaweedSpec append_fours(const SeaweedSpec& base, int r, FoursVariant variant) {
  if (base.top().parts().back() != 2) {
    throw DomainError("append_fours: base top must end in 2: " + base.to_string());
  }
  return append_doubled_tail(base, r, variant == FoursVariant::RFoursPlusTwo);
}

}  // namespace seaweed
