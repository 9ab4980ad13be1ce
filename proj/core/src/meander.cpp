#include "seaweed/meander.hpp"

#include <algorithm>
#include <numeric>

namespace seaweed {

namespace {

void add_block_arcs(const Composition& c, std::vector<Edge>& edges, std::vector<int>& partner) {
  int start = 1;
  for (int part : c.parts()) {
    int lo = start;
    int hi = start + part - 1;
    while (lo < hi) {
      edges.emplace_back(lo, hi);
      partner[lo] = hi;
      partner[hi] = lo;
      ++lo;
      --hi;
    }
    start += part;
  }
  std::sort(edges.begin(), edges.end());
}

}  // namespace

Meander::Meander(SeaweedSpec spec)
    : spec_(std::move(spec)),
      top_partner_(spec_.n() + 1, 0),
      bottom_partner_(spec_.n() + 1, 0) {
  add_block_arcs(spec_.top(), top_edges_, top_partner_);
  add_block_arcs(spec_.bottom(), bottom_edges_, bottom_partner_);
}

Meander build_meander(const SeaweedSpec& spec) { return Meander(spec); }

ComponentSummary components(const Meander& m) {
  const int n = m.n();
  ComponentSummary summary;
  std::vector<char> seen(n + 1, 0);

  // Walk alternating top/bottom edges; `use_top` says which side to leave by.
  auto walk = [&](int start, bool use_top) {
    std::vector<int> order{start};
    seen[start] = 1;
    int current = start;
    while (true) {
      const int next = use_top ? m.top_partner(current) : m.bottom_partner(current);
      if (next == 0 || seen[next]) break;
      order.push_back(next);
      seen[next] = 1;
      current = next;
      use_top = !use_top;
    }
    return order;
  };

  // Paths first: every path has an endpoint of degree <= 1, and the scan
  // meets its lower-numbered endpoint first.
  for (int v = 1; v <= n; ++v) {
    if (seen[v] || m.degree(v) > 1) continue;
    const bool use_top = m.top_partner(v) != 0;
    summary.components.push_back({walk(v, use_top), false});
    ++summary.paths;
  }
  for (int v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    summary.components.push_back({walk(v, true), true});
    ++summary.cycles;
  }
  std::sort(summary.components.begin(), summary.components.end(),
            [](const MeanderComponent& a, const MeanderComponent& b) {
              return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                     *std::min_element(b.vertices.begin(), b.vertices.end());
            });
  return summary;
}

int index_gl(const SeaweedSpec& spec) {
  const auto summary = components(build_meander(spec));
  return 2 * summary.cycles + summary.paths;
}

int index_sl(const SeaweedSpec& spec) { return index_gl(spec) - 1; }

bool is_frobenius(const SeaweedSpec& spec) { return index_sl(spec) == 0; }

int index_gcd_maximal_parabolic(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("gcd index formula needs positive parts");
  return std::gcd(a, b) - 1;
}

int index_gcd_three_part(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("gcd index formula needs positive parts");
  return std::gcd(a + b, b + c) - 1;
}

}  // namespace seaweed
