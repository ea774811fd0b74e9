#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "friendship/vertex_set.hpp"

namespace friendship {

// An r-uniform hypergraph on vertices 0..n-1.  Edges are stored sorted by
// bits(), the canonical order; construction validates and normalizes.
class Hypergraph {
 public:
  static Hypergraph make(int n, int r, std::vector<VertexSet> edges);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Throws InputError when |e| != r (asking the wrong question is a bug at
  // the call site, not an absent edge).
  bool contains(VertexSet e) const;

  // Rank of `e` in edges(), if present.
  std::optional<std::size_t> edge_index(VertexSet e) const;

  // Link of vertex a: { e \ {a} : a in e }, an (r-1)-uniform hypergraph on
  // the same vertex labels.
  Hypergraph link(int a) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph() = default;
  int n_ = 0;
  int r_ = 0;
  std::vector<VertexSet> edges_;
};

// Degrees of every k-subset of the vertex set, zeros included, keys in
// canonical order.  Refuses to materialize more than 2^24 rows.
class DegreeProfile {
 public:
  static DegreeProfile of(const Hypergraph& h, int k);

  int k() const { return k_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }

  std::uint64_t degree_of(VertexSet s) const;
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  // Sum of all degrees; equals C(r,k) * edge_count by double counting.
  std::uint64_t total() const;

 private:
  int k_ = 0;
  std::vector<VertexSet> sets_;
  std::vector<std::uint64_t> degrees_;
};

// Complete r-uniform hypergraph on m vertices.
Hypergraph complete_hypergraph(int m, int r);

}  // namespace friendship
