#include "seaweed/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace seaweed {

// --- OrientedMeander -------------------------------------------------------

OrientedMeander::OrientedMeander(Meander base) : base_(std::move(base)) {
  edges_.reserve(base_.top_edges().size() + base_.bottom_edges().size());
  for (const auto& [p, q] : base_.top_edges()) edges_.push_back({q, p});
  for (const auto& [p, q] : base_.bottom_edges()) edges_.push_back({p, q});
  std::sort(edges_.begin(), edges_.end());
}

OrientedMeander orient(const Meander& m) { return OrientedMeander(m); }

VertexPotential vertex_potentials(const OrientedMeander& om) {
  const Meander& m = om.base();
  const auto summary = components(m);
  if (summary.paths != 1 || summary.cycles != 0) {
    throw NotFrobeniusError(m.spec().to_string(), 2 * summary.cycles + summary.paths - 1);
  }
  const auto& path = summary.components.front().vertices;
  const int n = m.n();
  std::vector<int> phi(n + 1, 0);
  for (std::size_t s = 1; s < path.size(); ++s) {
    const int a = path[s - 1];
    const int b = path[s];
    // Top edges point from the larger vertex to the smaller, bottom edges
    // from the smaller to the larger; a forward step lowers phi by one.
    const bool forward = m.top_partner(a) == b ? a > b : a < b;
    phi[b] = phi[a] + (forward ? -1 : 1);
  }
  const int shift = phi[n];
  for (int v = 1; v <= n; ++v) phi[v] -= shift;
  return VertexPotential(std::move(phi));
}

// --- ShapeMask -------------------------------------------------------------

namespace {

std::vector<int> block_index(const Composition& c) {
  std::vector<int> block(c.n() + 1, 0);
  int v = 1;
  for (std::size_t b = 0; b < c.size(); ++b) {
    for (int k = 0; k < c[b]; ++k) block[v++] = static_cast<int>(b);
  }
  return block;
}

}  // namespace

ShapeMask::ShapeMask(const SeaweedSpec& spec)
    : top_block_(block_index(spec.top())), bottom_block_(block_index(spec.bottom())) {}

std::size_t ShapeMask::count() const {
  std::size_t total = 0;
  for (int i = 1; i <= n(); ++i) {
    for (int j = 1; j <= n(); ++j) total += admits(i, j);
  }
  return total;
}

ShapeMask shape_mask(const SeaweedSpec& spec) { return ShapeMask(spec); }

// --- PartialIntegerMatrix --------------------------------------------------

PartialIntegerMatrix::PartialIntegerMatrix(int n, std::vector<std::optional<int>> cells)
    : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("matrix cell count does not match n*n");
  }
}

int PartialIntegerMatrix::at(int i, int j) const {
  const auto& c = cell(i, j);
  if (!c) {
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside the seaweed shape");
  }
  return *c;
}

std::size_t PartialIntegerMatrix::defined_count() const {
  std::size_t total = 0;
  for (const auto& c : cells_) total += c.has_value();
  return total;
}

IntegerMultiset PartialIntegerMatrix::values() const { return block_values(1, n_, 1, n_); }

IntegerMultiset PartialIntegerMatrix::block_values(int r0, int r1, int c0, int c1) const {
  IntegerMultiset out;
  for (int i = r0; i <= r1; ++i) {
    for (int j = c0; j <= c1; ++j) {
      if (const auto& c = cell(i, j)) out.add(*c);
    }
  }
  return out;
}

PartialIntegerMatrix PartialIntegerMatrix::transposed() const {
  std::vector<std::optional<int>> out(cells_.size());
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out[index(j, i)] = cell(i, j);
  }
  return PartialIntegerMatrix(n_, std::move(out));
}

PartialIntegerMatrix PartialIntegerMatrix::antitransposed() const {
  std::vector<std::optional<int>> out(cells_.size());
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out[index(n_ - j + 1, n_ - i + 1)] = cell(i, j);
  }
  return PartialIntegerMatrix(n_, std::move(out));
}

std::string PartialIntegerMatrix::to_text() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out += ' ';
      const auto& c = cell(i, j);
      out += c ? std::to_string(*c) : std::string("·");
    }
    out += '\n';
  }
  return out;
}

// --- PrincipalElement ------------------------------------------------------

Rational PrincipalElement::trace() const {
  Rational sum;
  for (const auto& d : diag) sum = sum + d;
  return sum;
}

// --- FrobeniusSeaweed ------------------------------------------------------

FrobeniusSeaweed::FrobeniusSeaweed(const SeaweedSpec& spec)
    : oriented_(build_meander(spec)), potential_(vertex_potentials(oriented_)), mask_(spec) {}

PartialIntegerMatrix FrobeniusSeaweed::spectrum_matrix() const {
  const int n = spec().n();
  std::vector<std::optional<int>> cells(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (mask_.admits(i, j)) cells[(i - 1) * n + (j - 1)] = potential_.weight(i, j);
    }
  }
  return PartialIntegerMatrix(n, std::move(cells));
}

PartialIntegerMatrix FrobeniusSeaweed::extended_spectrum_matrix() const {
  const int n = spec().n();
  std::vector<std::optional<int>> cells(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) cells[(i - 1) * n + (j - 1)] = potential_.weight(i, j);
  }
  return PartialIntegerMatrix(n, std::move(cells));
}

IntegerMultiset FrobeniusSeaweed::spectrum() const {
  const int n = spec().n();
  IntegerMultiset out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (mask_.admits(i, j)) out.add(potential_.weight(i, j));
    }
  }
  // The diagonal carries n zeros; sl(n) has only n-1 diagonal basis elements.
  out.remove(0);
  return out;
}

IntegerMultiset FrobeniusSeaweed::extended_spectrum() const {
  const int n = spec().n();
  IntegerMultiset out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.add(potential_.weight(i, j));
  }
  out.remove(0);
  return out;
}

PrincipalElement FrobeniusSeaweed::principal_element() const {
  const int n = spec().n();
  std::int64_t total = 0;
  for (int v = 1; v <= n; ++v) total += potential_(v);
  const Rational mean(total, n);
  PrincipalElement out;
  out.diag.reserve(n);
  for (int v = 1; v <= n; ++v) out.diag.push_back(Rational(potential_(v)) - mean);
  return out;
}

PartialIntegerMatrix spectrum_matrix(const SeaweedSpec& spec) {
  return FrobeniusSeaweed(spec).spectrum_matrix();
}

PartialIntegerMatrix extended_spectrum_matrix(const SeaweedSpec& spec) {
  return FrobeniusSeaweed(spec).extended_spectrum_matrix();
}

IntegerMultiset spectrum(const SeaweedSpec& spec) { return FrobeniusSeaweed(spec).spectrum(); }

IntegerMultiset extended_spectrum(const SeaweedSpec& spec) {
  return FrobeniusSeaweed(spec).extended_spectrum();
}

PrincipalElement principal_element(const SeaweedSpec& spec) {
  return FrobeniusSeaweed(spec).principal_element();
}

std::vector<DirectedEdge> frobenius_form_support(const SeaweedSpec& spec) {
  return FrobeniusSeaweed(spec).frobenius_form_support();
}

}  // namespace seaweed
