#pragma once

#include "friendship/hypergraph.hpp"
#include "friendship/steiner.hpp"

namespace friendship {

// Universal construction: given S = S(r-1, r, m), adjoin a new vertex
// u = m and take every block of S plus every (r-1)-subset of the old
// vertices extended by u.  The result is an r-uniform friendship hypergraph
// on m+1 vertices with universal friend u and (r+1)/r * C(m, r-1) edges,
// the minimum possible.
Hypergraph universal(const SteinerSystem& s);

// K_{r+1}^r, the unique friendship r-hypergraph on r+1 vertices.
Hypergraph complete(int r);

// Truncation of S(r+1, r+2, 2r+4): fix three distinct points a, b, c
// (defaults: the three highest), keep the blocks through a that avoid
// {b, c}, drop a from each, and renumber the surviving 2r+1 points in
// increasing order.  The C(2r+1,r)/(r+3) resulting (r+1)-sets pairwise
// share at most r-1 vertices, and the union of their complete r-graphs is
// an r-uniform friendship hypergraph without a universal friend.
// Available for r = 2 (from S(3,4,8)) and r = 4 (from S(5,6,12)).
Hypergraph truncated(int r, int a = -1, int b = -1, int c = -1);

// The (r+1)-sets underlying truncated(r, a, b, c), in canonical order.
std::vector<VertexSet> truncated_cliques(int r, int a = -1, int b = -1, int c = -1);

// Cube construction: vertices are the 2^k points of {0,1}^k, edges the
// triples with no coordinate constant across all three points (equivalently,
// pairwise Hamming distances summing to 2k).  A 3-uniform friendship
// hypergraph with 2^(k-1) * (3^(k-1) - 1) edges, never minimal in this range.
Hypergraph cube(int k);

// Union of the complete r-graphs of the given (r+1)-sets; throws InputError
// if two of them share an r-subset.
Hypergraph expand_cliques(int n, int r, const std::vector<VertexSet>& cliques);

}  // namespace friendship
