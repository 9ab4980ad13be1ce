#pragma once

// Meander graphs of seaweeds, their path/cycle decomposition, and index.

#include <utility>
#include <vector>

#include "seaweed/core.hpp"

namespace seaweed {

/// Unordered edge stored with first < second; vertices are 1-based.
using Edge = std::pair<int, int>;

/// Graph on n collinear vertices with nested top arcs per top block and
/// nested bottom arcs per bottom block. Every vertex has at most one top
/// partner and at most one bottom partner.
class Meander {
 public:
  explicit Meander(SeaweedSpec spec);

  int n() const noexcept { return spec_.n(); }
  const SeaweedSpec& spec() const noexcept { return spec_; }
  const std::vector<Edge>& top_edges() const noexcept { return top_edges_; }
  const std::vector<Edge>& bottom_edges() const noexcept { return bottom_edges_; }

  /// Partner of v across its top (bottom) edge, or 0 when unmatched.
  int top_partner(int v) const { return top_partner_[v]; }
  int bottom_partner(int v) const { return bottom_partner_[v]; }
  int degree(int v) const { return (top_partner_[v] != 0) + (bottom_partner_[v] != 0); }

 private:
  SeaweedSpec spec_;
  std::vector<Edge> top_edges_;
  std::vector<Edge> bottom_edges_;
  std::vector<int> top_partner_;     // index 0 unused
  std::vector<int> bottom_partner_;  // index 0 unused
};

Meander build_meander(const SeaweedSpec& spec);

struct MeanderComponent {
  /// Path order from the lower-numbered endpoint, or cycle order from the
  /// lowest vertex leaving along its top edge.
  std::vector<int> vertices;
  bool cycle = false;
};

struct ComponentSummary {
  int paths = 0;
  int cycles = 0;
  std::vector<MeanderComponent> components;
};

ComponentSummary components(const Meander& m);

/// 2C + P, the index of the gl(n) seaweed.
int index_gl(const SeaweedSpec& spec);
/// 2C + P - 1, the index of the type-A (sl(n)) seaweed.
int index_sl(const SeaweedSpec& spec);
/// Index zero, i.e. the meander is a single path.
bool is_frobenius(const SeaweedSpec& spec);

/// gcd(a, b) - 1: index of a|b / a+b.
int index_gcd_maximal_parabolic(int a, int b);
/// gcd(a+b, b+c) - 1: index of a|b|c / a+b+c and of a|b / c|(a+b-c).
int index_gcd_three_part(int a, int b, int c);

}  // namespace seaweed
