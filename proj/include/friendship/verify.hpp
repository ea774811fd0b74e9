#pragma once

#include <optional>

#include "friendship/certificate.hpp"
#include "friendship/hypergraph.hpp"
#include "friendship/steiner.hpp"

namespace friendship {

// The friendship property: every r-subset R of the vertices has exactly one
// friend, a vertex u with B + u an edge for every (r-1)-subset B of R.  (A
// friend is automatically outside R.)

// Friends of one r-set, ascending.
std::vector<int> friends_of(const Hypergraph& h, VertexSet r_set);

// Exhaustive scan over all C(n,r) r-subsets.  FAIL carries the first r-set
// (canonical order) with friend count != 1 and its full friend list.  ERROR
// when the property cannot apply (r < 2 or n <= r).  `jobs` threads split
// the scan; the outcome is identical for any job count.
Certificate verify_friendship(const Hypergraph& h, int jobs = 1);

// A clique cover certifying friendship structure: every edge of `source`
// lies in exactly one (r+1)-set all of whose r-subsets are edges.
struct Decomposition {
  Hypergraph source;                       // the r-uniform hypergraph decomposed
  std::vector<VertexSet> cliques;          // (r+1)-sets, canonical order
  std::vector<std::uint32_t> edge_clique;  // edge i lies in cliques[edge_clique[i]]

  int n() const { return source.n(); }
  int r() const { return source.r(); }
  // The cliques as an (r+1)-uniform hypergraph.
  Hypergraph cliques_hypergraph() const;
  ordered_json to_json() const;
};

struct DecomposeResult {
  std::optional<Decomposition> decomposition;  // set iff certificate passes
  Certificate certificate;
};

// Every friendship hypergraph decomposes this way; the converse fails, so
// this is a separate, weaker check.
DecomposeResult decompose(const Hypergraph& h);

// Classify the (r-1)-subsets of the vertices by their degree in the clique
// hypergraph: sociable (>= 2), unsociable (== 1), uncovered (== 0).  When
// the sociable family is exactly the (r-1)-sets through one vertex, that
// vertex is reported as the star center.
struct SociableReport {
  int k = 0;  // r-1
  std::vector<VertexSet> sociable;
  std::vector<VertexSet> unsociable;
  std::vector<VertexSet> uncovered;
  std::vector<std::uint64_t> sociable_degrees;  // aligned with `sociable`
  std::optional<int> star_center;
  ordered_json to_json() const;
};

SociableReport sociable_report(const Decomposition& d);

// Does some vertex u extend every (r-1)-subset of the remaining vertices to
// an edge, with the u-free edges forming an S(r-1, r, n-1)?  PASS pins down
// the construction the hypergraph came from.
struct UniversalResult {
  Certificate certificate;
  std::optional<int> universal_vertex;
  std::optional<SteinerSystem> extracted;  // set iff PASS
};

UniversalResult is_universal(const Hypergraph& h);

// The k-uniform hypergraph whose edges are the k-sets meeting {0,...,l-1}.
Hypergraph build_m(int n, int k, int l);

// Is g (k-uniform, k = g.r()) saturated for the complete (k+l)-clique: no
// k-subsets of any (k+l)-set all present, yet adding any non-edge creates
// such a configuration.
Certificate verify_saturated(const Hypergraph& g, int l);

// floor((r+1)(3r-4)/6), the cap on how many cliques through an outside
// vertex can meet a fixed clique in r-1 points.
int shadow_bound(int r);

// Check that cap for every (clique, outside vertex) pair of a decomposition.
Certificate shadow_check(const Decomposition& d);

// Exhaustive lemma checks over all labeled graphs at small sizes.
// Every graph on 3 <= n <= max_n vertices with minimum degree >= 1 and no
// edge joining two degree-1 vertices has at least ceil(2n/3) edges.
Certificate check_path_components(int max_n);
// For 3 <= r <= max_r, among graphs on r+1 vertices with maximum degree
// <= r-1 whose degree-(r-1) vertices are pairwise adjacent, the maximum
// edge count is exactly shadow_bound(r).
Certificate check_clique_complement(int max_r);

}  // namespace friendship
