#pragma once

// Domain primitives: compositions, seaweed specs and integer multisets.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seaweed/error.hpp"

namespace seaweed {

/// Ordered list of positive parts. Immutable once built.
class Composition {
 public:
  /// Throws DomainError when `parts` is empty or holds a part < 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  Composition reversed() const;

  /// Canonical pipe-separated text, e.g. "1|2|3".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A pair of compositions of the same n: the combinatorial identity of a
/// type-A seaweed. `top` fixes the flag V, `bottom` the flag W.
class SeaweedSpec {
 public:
  /// Throws DomainError when the two sums differ.
  SeaweedSpec(Composition top, Composition bottom);

  const Composition& top() const noexcept { return top_; }
  const Composition& bottom() const noexcept { return bottom_; }
  int n() const noexcept { return top_.n(); }

  /// bottom / top
  SeaweedSpec swapped() const;
  /// rev(top) / rev(bottom)
  SeaweedSpec reversed() const;

  /// Canonical text "a1|...|am / b1|...|bt".
  std::string to_string() const;

  friend bool operator==(const SeaweedSpec&, const SeaweedSpec&) = default;

 private:
  Composition top_;
  Composition bottom_;
};

Composition parse_composition(std::string_view text);
SeaweedSpec parse_seaweed(std::string_view text);

/// The composition of n whose cut positions are the set bits of `mask`
/// (bit i set means a cut after vertex i+1). Requires mask < 2^(n-1).
Composition composition_from_cut_mask(int n, std::uint64_t mask);

/// All 2^(n-1) compositions of n, ordered by cut mask ascending.
/// Throws DomainError for n < 1 or n > 63.
std::vector<Composition> compositions_of(int n);

/// Sorted value -> multiplicity map. Zero multiplicities are never stored.
class IntegerMultiset {
 public:
  using Value = int;
  using Count = std::int64_t;
  using Map = std::map<Value, Count>;

  IntegerMultiset() = default;
  IntegerMultiset(std::initializer_list<std::pair<const Value, Count>> init);

  void add(Value value, Count times = 1);
  /// Throws DomainError if fewer than `times` copies are present.
  void remove(Value value, Count times = 1);
  void merge(const IntegerMultiset& other);

  Count count(Value value) const;
  Count size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  Value min() const { return counts_.begin()->first; }
  Value max() const { return counts_.rbegin()->first; }
  const Map& counts() const noexcept { return counts_; }

  /// Multiplicities in ascending value order.
  std::vector<Count> multiplicities() const;
  std::vector<Value> values() const;

  /// True iff every value of *this occurs in `other` at least as often.
  bool is_submultiset_of(const IntegerMultiset& other) const;

  /// Exponent notation with ascending values, e.g. "{-2, -1^2, 0^5}".
  std::string to_exponent_string() const;

  friend bool operator==(const IntegerMultiset&, const IntegerMultiset&) = default;

 private:
  Map counts_;
  Count size_ = 0;
};

bool multiset_equal(const IntegerMultiset& x, const IntegerMultiset& y);

/// Parses the exponent notation produced by to_exponent_string().
IntegerMultiset parse_exponent_multiset(std::string_view text);

/// {"value": count, ...} with decimal string keys in ascending numeric order.
nlohmann::ordered_json to_json(const IntegerMultiset& s);
IntegerMultiset multiset_from_json(const nlohmann::json& j);

}  // namespace seaweed
