#include "friendship/hypergraph.hpp"

#include <algorithm>

namespace friendship {

Hypergraph Hypergraph::make(int n, int r, std::vector<VertexSet> edges) {
  if (n < 1 || n > 64) throw InputError("hypergraph needs 1 <= n <= 64");
  if (r < 1 || r > n) throw InputError("hypergraph needs 1 <= r <= n");
  const VertexSet ground = VertexSet::range(n);
  for (VertexSet e : edges) {
    if (e.count() != r) throw InputError("edge " + e.to_string() + " is not a " + std::to_string(r) + "-set");
    if (!e.subset_of(ground)) throw InputError("edge " + e.to_string() + " leaves the vertex range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate edge in edge list");
  Hypergraph h;
  h.n_ = n;
  h.r_ = r;
  h.edges_ = std::move(edges);
  return h;
}

bool Hypergraph::contains(VertexSet e) const {
  if (e.count() != r_) throw InputError("contains() asked about a set of wrong cardinality");
  if (!e.subset_of(vertices())) throw InputError("contains() asked about a vertex out of range");
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> Hypergraph::edge_index(VertexSet e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Hypergraph Hypergraph::link(int a) const {
  if (a < 0 || a >= n_) throw InputError("link vertex out of range");
  if (r_ < 2) throw InputError("link needs uniformity >= 2");
  std::vector<VertexSet> out;
  for (VertexSet e : edges_)
    if (e.contains(a)) out.push_back(e.without(a));
  return Hypergraph::make(n_, r_ - 1, std::move(out));
}

DegreeProfile DegreeProfile::of(const Hypergraph& h, int k) {
  if (k < 1 || k >= h.r()) throw InputError("degree profile needs 1 <= k < r");
  const std::uint64_t rows = binomial_u64(h.n(), k);
  if (rows > (std::uint64_t{1} << 24)) throw InputError("degree profile too large to materialize");
  DegreeProfile p;
  p.k_ = k;
  p.sets_.reserve(rows);
  for_each_k_subset(h.vertices(), k, [&](VertexSet s) { p.sets_.push_back(s); });
  p.degrees_.assign(p.sets_.size(), 0);
  for (VertexSet e : h.edges()) {
    for_each_k_subset(e, k, [&](VertexSet s) {
      auto it = std::lower_bound(p.sets_.begin(), p.sets_.end(), s);
      ++p.degrees_[static_cast<std::size_t>(it - p.sets_.begin())];
    });
  }
  return p;
}

std::uint64_t DegreeProfile::degree_of(VertexSet s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) throw InputError("degree_of: set is not a k-subset of the vertex set");
  return degrees_[static_cast<std::size_t>(it - sets_.begin())];
}

std::uint64_t DegreeProfile::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::uint64_t DegreeProfile::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::uint64_t DegreeProfile::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t d : degrees_) t += d;
  return t;
}

Hypergraph complete_hypergraph(int m, int r) {
  if (m < 1 || m > 64) throw InputError("complete hypergraph needs 1 <= m <= 64");
  if (r < 1 || r > m) throw InputError("complete hypergraph needs 1 <= r <= m");
  std::vector<VertexSet> edges;
  edges.reserve(binomial_u64(m, r));
  for_each_k_subset(VertexSet::range(m), r, [&](VertexSet s) { edges.push_back(s); });
  return Hypergraph::make(m, r, std::move(edges));
}

}  // namespace friendship
