#pragma once

// Oriented meanders, path weights, spectrum matrices, spectra and the
// principal element of a Frobenius type-A seaweed.

#include <optional>
#include <string>
#include <vector>

#include "seaweed/core.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/rational.hpp"

namespace seaweed {

/// Directed edge (from, to); 1-based.
struct DirectedEdge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Top edges point right-to-left, bottom edges left-to-right.
class OrientedMeander {
 public:
  explicit OrientedMeander(Meander base);

  const Meander& base() const noexcept { return base_; }
  /// Sorted lexicographically by (from, to).
  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }

 private:
  Meander base_;
  std::vector<DirectedEdge> edges_;
};

OrientedMeander orient(const Meander& m);

/// phi with phi(u) - phi(v) = 1 on every directed edge and phi(n) = 0, so
/// phi(i) = w(P_{i,n}) and w(P_{i,j}) = phi(i) - phi(j).
class VertexPotential {
 public:
  explicit VertexPotential(std::vector<int> phi) : phi_(std::move(phi)) {}

  int n() const noexcept { return static_cast<int>(phi_.size()) - 1; }
  int operator()(int v) const { return phi_[v]; }
  int weight(int i, int j) const { return phi_[i] - phi_[j]; }
  /// phi(1..n)
  std::vector<int> values() const { return {phi_.begin() + 1, phi_.end()}; }

 private:
  std::vector<int> phi_;  // index 0 unused
};

/// Throws NotFrobeniusError unless the meander is one path and no cycles.
VertexPotential vertex_potentials(const OrientedMeander& om);

/// Admissible (row, col) cells of the seaweed: the cells preserving both
/// flags. (i, j) is admissible iff top_block(i) <= top_block(j) and
/// bottom_block(i) >= bottom_block(j).
class ShapeMask {
 public:
  explicit ShapeMask(const SeaweedSpec& spec);

  int n() const noexcept { return static_cast<int>(top_block_.size()) - 1; }
  bool admits(int i, int j) const {
    return top_block_[i] <= top_block_[j] && bottom_block_[i] >= bottom_block_[j];
  }
  /// Number of admissible cells, diagonal included.
  std::size_t count() const;

 private:
  std::vector<int> top_block_;     // index 0 unused
  std::vector<int> bottom_block_;  // index 0 unused
};

ShapeMask shape_mask(const SeaweedSpec& spec);

/// n x n integer matrix defined only on a mask. Rows and columns are 1-based.
class PartialIntegerMatrix {
 public:
  PartialIntegerMatrix(int n, std::vector<std::optional<int>> cells);

  int n() const noexcept { return n_; }
  bool defined(int i, int j) const { return cell(i, j).has_value(); }
  const std::optional<int>& cell(int i, int j) const { return cells_[index(i, j)]; }
  /// Throws std::out_of_range if (i, j) is outside the mask.
  int at(int i, int j) const;

  std::size_t defined_count() const;
  /// Multiset of all defined entries.
  IntegerMultiset values() const;
  /// Multiset of the defined entries in rows [r0, r1] x cols [c0, c1].
  IntegerMultiset block_values(int r0, int r1, int c0, int c1) const;

  PartialIntegerMatrix transposed() const;
  /// Transpose about the antidiagonal: (i, j) -> (n-j+1, n-i+1).
  PartialIntegerMatrix antitransposed() const;

  /// Rows on lines, entries separated by single spaces, "·" off the mask.
  std::string to_text() const;

  friend bool operator==(const PartialIntegerMatrix&, const PartialIntegerMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<std::optional<int>> cells_;
};

/// Diagonal of the principal element as exact rationals; trace zero.
struct PrincipalElement {
  std::vector<Rational> diag;  // diag[0] is vertex 1
  Rational trace() const;
};

/// All spectral data of a Frobenius seaweed, derived from one walk of its
/// meander. Construction throws NotFrobeniusError for non-Frobenius specs.
class FrobeniusSeaweed {
 public:
  explicit FrobeniusSeaweed(const SeaweedSpec& spec);

  const SeaweedSpec& spec() const noexcept { return oriented_.base().spec(); }
  const OrientedMeander& oriented() const noexcept { return oriented_; }
  const VertexPotential& potential() const noexcept { return potential_; }
  const ShapeMask& mask() const noexcept { return mask_; }

  PartialIntegerMatrix spectrum_matrix() const;
  PartialIntegerMatrix extended_spectrum_matrix() const;
  IntegerMultiset spectrum() const;
  IntegerMultiset extended_spectrum() const;
  PrincipalElement principal_element() const;
  std::vector<DirectedEdge> frobenius_form_support() const { return oriented_.edges(); }

 private:
  OrientedMeander oriented_;
  VertexPotential potential_;
  ShapeMask mask_;
};

PartialIntegerMatrix spectrum_matrix(const SeaweedSpec& spec);
PartialIntegerMatrix extended_spectrum_matrix(const SeaweedSpec& spec);
IntegerMultiset spectrum(const SeaweedSpec& spec);
IntegerMultiset extended_spectrum(const SeaweedSpec& spec);
PrincipalElement principal_element(const SeaweedSpec& spec);
std::vector<DirectedEdge> frobenius_form_support(const SeaweedSpec& spec);

}  // namespace seaweed
