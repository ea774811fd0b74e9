#include "friendship/constructions.hpp"

#include <algorithm>
#include <array>

namespace friendship {

Hypergraph universal(const SteinerSystem& s) {
  if (s.t != s.k - 1) throw InputError("universal construction needs an S(r-1, r, m) system");
  const int r = s.k;
  const int m = s.blocks.n();
  if (m + 1 > 64) throw InputError("universal construction would exceed 64 vertices");
  const int u = m;
  std::vector<VertexSet> edges(s.blocks.edges());
  for_each_k_subset(VertexSet::range(m), r - 1, [&](VertexSet a) { edges.push_back(a.with(u)); });
  return Hypergraph::make(m + 1, r, std::move(edges));
}

Hypergraph complete(int r) {
  if (r < 2 || r > 63) throw InputError("complete friendship hypergraph needs 2 <= r <= 63");
  return complete_hypergraph(r + 1, r);
}

std::vector<VertexSet> truncated_cliques(int r, int a, int b, int c) {
  if (r < 2) throw InputError("truncated construction needs r >= 2");
  const int points = 2 * r + 4;
  if (a < 0 && b < 0 && c < 0) {
    a = points - 1;
    b = points - 3;
    c = points - 2;
  }
  if (a < 0 || b < 0 || c < 0 || a >= points || b >= points || c >= points || a == b || a == c ||
      b == c)
    throw InputError("truncated construction needs three distinct points of the system");
  const SteinerSystem s = make_steiner(r + 1, r + 2, points);
  const VertexSet avoid = VertexSet::of({b, c});
  // Renumber the surviving points (everything but a, b, c) to 0..2r.
  std::array<int, 64> relabel{};
  int next = 0;
  for (int v = 0; v < points; ++v) relabel[v] = (v == a || v == b || v == c) ? -1 : next++;
  std::vector<VertexSet> cliques;
  for (VertexSet block : s.blocks.edges()) {
    if (!block.contains(a) || !(block & avoid).empty()) continue;
    VertexSet q;
    block.without(a).for_each_vertex([&](int v) { q = q.with(relabel[v]); });
    cliques.push_back(q);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

Hypergraph truncated(int r, int a, int b, int c) {
  return expand_cliques(2 * r + 1, r, truncated_cliques(r, a, b, c));
}

Hypergraph cube(int k) {
  if (k < 3 || k > 6) throw InputError("cube construction needs 3 <= k <= 6");
  const int n = 1 << k;
  std::vector<VertexSet> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        const int all_one = x & y & z;
        const int all_zero = ~x & ~y & ~z & (n - 1);
        if ((all_one | all_zero) == 0) edges.push_back(VertexSet::of({x, y, z}));
      }
  return Hypergraph::make(n, 3, std::move(edges));
}

Hypergraph expand_cliques(int n, int r, const std::vector<VertexSet>& cliques) {
  std::vector<VertexSet> edges;
  const VertexSet ground = VertexSet::range(n);
  for (VertexSet q : cliques) {
    if (q.count() != r + 1) throw InputError("clique " + q.to_string() + " is not an (r+1)-set");
    if (!q.subset_of(ground)) throw InputError("clique " + q.to_string() + " leaves the vertex range");
    for_each_k_subset(q, r, [&](VertexSet e) { edges.push_back(e); });
  }
  try {
    return Hypergraph::make(n, r, std::move(edges));
  } catch (const InputError&) {
    throw InputError("cliques are not edge-disjoint");
  }
}

}  // namespace friendship
