#include "friendship/verify.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "friendship/hg_io.hpp"

namespace friendship {

namespace {

// (r-1)-set mask -> bitmask of vertices extending it to an edge.  A vertex
// of the key never appears in its value, so friend masks need no cleanup.
using ExtMap = std::unordered_map<std::uint64_t, std::uint64_t>;

ExtMap build_ext_map(const Hypergraph& h) {
  ExtMap ext;
  ext.reserve(h.edge_count() * static_cast<std::uint64_t>(h.r()));
  for (VertexSet e : h.edges())
    e.for_each_vertex([&](int v) { ext[e.without(v).bits()] |= std::uint64_t{1} << v; });
  return ext;
}

std::uint64_t friend_mask(const ExtMap& ext, VertexSet r_set) {
  std::uint64_t mask = ~std::uint64_t{0};
  r_set.for_each_vertex([&](int v) {
    if (mask == 0) return;
    auto it = ext.find(r_set.without(v).bits());
    mask &= (it == ext.end()) ? 0 : it->second;
  });
  return mask;
}

ordered_json mask_to_json(std::uint64_t bits) { return set_to_json(VertexSet::from_bits(bits)); }

ordered_json base_stats(const Hypergraph& h) {
  ordered_json stats;
  stats["n"] = h.n();
  stats["r"] = h.r();
  stats["edges"] = h.edge_count();
  return stats;
}

}  // namespace

std::vector<int> friends_of(const Hypergraph& h, VertexSet r_set) {
  if (h.r() < 2) throw InputError("friendship needs uniformity >= 2");
  if (r_set.count() != h.r()) throw InputError("friends_of needs an r-set");
  if (!r_set.subset_of(h.vertices())) throw InputError("friends_of: set leaves the vertex range");
  std::vector<int> out;
  for (int u = 0; u < h.n(); ++u) {
    if (r_set.contains(u)) continue;
    bool ok = true;
    for_each_k_subset(r_set, h.r() - 1, [&](VertexSet b) {
      if (ok && !h.contains(b.with(u))) ok = false;
    });
    if (ok) out.push_back(u);
  }
  return out;
}

Certificate verify_friendship(const Hypergraph& h, int jobs) {
  const std::string sha = hypergraph_sha256(h);
  ordered_json stats = base_stats(h);
  if (h.r() < 2) {
    ordered_json w;
    w["reason"] = "friendship is defined for uniformity >= 2";
    return Certificate::make_error("friendship", std::move(w), std::move(stats), sha);
  }
  if (h.n() <= h.r()) {
    ordered_json w;
    w["reason"] = "no vertex can lie outside an r-set when n <= r";
    return Certificate::make_error("friendship", std::move(w), std::move(stats), sha);
  }

  const int n = h.n();
  const int r = h.r();
  const std::uint64_t total = binomial_u64(n, r);
  const ExtMap ext = build_ext_map(h);

  struct Violation {
    std::uint64_t rank = 0;
    VertexSet r_set;
    std::uint64_t friends = 0;
  };

  if (jobs < 1) throw InputError("jobs must be >= 1");
  int workers = std::min<int>(jobs, 64);
  if (total < 4096) workers = 1;

  std::vector<std::optional<Violation>> found(static_cast<std::size_t>(workers));
  auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::optional<Violation>& out) {
    detail::KSubsetCursor cur(VertexSet::range(n), r);
    cur.compact = k_subset_unrank(r, lo).bits();
    cur.remaining = total - lo;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      const VertexSet rs = cur.current();
      const std::uint64_t fm = friend_mask(ext, rs);
      if (std::popcount(fm) != 1 && !out) out = Violation{rank, rs, fm};
      cur.advance();
    }
  };

  if (workers == 1) {
    scan(0, total, found[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(scan, lo, hi, std::ref(found[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();
  }

  std::optional<Violation> first;
  for (const auto& v : found)
    if (v && (!first || v->rank < first->rank)) first = v;

  stats["r_sets_checked"] = total;
  if (!first) return Certificate::make_pass("friendship", std::move(stats), sha);
  ordered_json w;
  w["r_set"] = set_to_json(first->r_set);
  w["friends"] = mask_to_json(first->friends);
  return Certificate::make_fail("friendship", std::move(w), std::move(stats), sha);
}

Hypergraph Decomposition::cliques_hypergraph() const {
  return Hypergraph::make(n(), r() + 1, cliques);
}

ordered_json Decomposition::to_json() const {
  ordered_json j;
  j["n"] = n();
  j["r"] = r();
  j["edges"] = source.edge_count();
  ordered_json cl = ordered_json::array();
  for (VertexSet q : cliques) cl.push_back(set_to_json(q));
  j["cliques"] = std::move(cl);
  ordered_json assign = ordered_json::array();
  for (std::uint32_t c : edge_clique) assign.push_back(c);
  j["edge_assignments"] = std::move(assign);
  return j;
}

DecomposeResult decompose(const Hypergraph& h) {
  const std::string sha = hypergraph_sha256(h);
  ordered_json stats = base_stats(h);
  if (h.r() < 2) {
    ordered_json w;
    w["reason"] = "clique decomposition is defined for uniformity >= 2";
    return {std::nullopt, Certificate::make_error("decomposition", std::move(w), std::move(stats), sha)};
  }
  if (h.n() <= h.r()) {
    ordered_json w;
    w["reason"] = "no (r+1)-clique fits when n <= r";
    return {std::nullopt, Certificate::make_error("decomposition", std::move(w), std::move(stats), sha)};
  }

  const ExtMap ext = build_ext_map(h);
  std::vector<VertexSet> cliques;
  cliques.reserve(h.edge_count() / static_cast<std::uint64_t>(h.r() + 1) + 1);
  for (VertexSet e : h.edges()) {
    const std::uint64_t cand = friend_mask(ext, e);
    if (std::popcount(cand) != 1) {
      ordered_json w;
      w["edge"] = set_to_json(e);
      w["completions"] = mask_to_json(cand);
      return {std::nullopt,
              Certificate::make_fail("decomposition", std::move(w), std::move(stats), sha)};
    }
    cliques.push_back(e.with(std::countr_zero(cand)));
  }

  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  if (cliques.size() * static_cast<std::uint64_t>(h.r() + 1) != h.edge_count())
    throw InternalError("clique cover does not partition the edge set");

  std::vector<std::uint32_t> edge_clique(h.edge_count());
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const VertexSet e = h.edges()[i];
    const VertexSet q = e.with(std::countr_zero(friend_mask(ext, e)));
    const auto it = std::lower_bound(cliques.begin(), cliques.end(), q);
    edge_clique[i] = static_cast<std::uint32_t>(it - cliques.begin());
  }

  stats["cliques"] = cliques.size();
  Certificate cert = Certificate::make_pass("decomposition", std::move(stats), sha);
  return {Decomposition{h, std::move(cliques), std::move(edge_clique)}, std::move(cert)};
}

ordered_json SociableReport::to_json() const {
  ordered_json j;
  j["k"] = k;
  ordered_json soc = ordered_json::array();
  for (VertexSet s : sociable) soc.push_back(set_to_json(s));
  j["sociable"] = std::move(soc);
  ordered_json degs = ordered_json::array();
  for (std::uint64_t d : sociable_degrees) degs.push_back(d);
  j["sociable_degrees"] = std::move(degs);
  j["sociable_count"] = sociable.size();
  j["unsociable_count"] = unsociable.size();
  j["uncovered_count"] = uncovered.size();
  if (star_center)
    j["star_center"] = *star_center;
  else
    j["star_center"] = nullptr;
  return j;
}

SociableReport sociable_report(const Decomposition& d) {
  SociableReport rep;
  rep.k = d.r() - 1;
  const DegreeProfile prof = DegreeProfile::of(d.cliques_hypergraph(), rep.k);
  for (std::size_t i = 0; i < prof.sets().size(); ++i) {
    const VertexSet s = prof.sets()[i];
    const std::uint64_t deg = prof.degrees()[i];
    if (deg == 0) {
      rep.uncovered.push_back(s);
    } else if (deg == 1) {
      rep.unsociable.push_back(s);
    } else {
      rep.sociable.push_back(s);
      rep.sociable_degrees.push_back(deg);
    }
  }

  if (!rep.sociable.empty()) {
    std::uint64_t common = ~std::uint64_t{0};
    for (VertexSet s : rep.sociable) common &= s.bits();
    VertexSet::from_bits(common).for_each_vertex([&](int u) {
      if (rep.star_center) return;
      if (rep.sociable.size() == binomial_u64(d.n() - 1, rep.k - 1)) rep.star_center = u;
    });
  }
  return rep;
}

UniversalResult is_universal(const Hypergraph& h) {
  const std::string sha = hypergraph_sha256(h);
  ordered_json stats = base_stats(h);
  if (h.r() < 2 || h.n() <= h.r()) {
    ordered_json w;
    w["reason"] = "universality needs uniformity >= 2 and n > r";
    return {Certificate::make_error("universal", std::move(w), std::move(stats), sha), std::nullopt,
            std::nullopt};
  }

  const int n = h.n();
  const int r = h.r();
  ordered_json refutations = ordered_json::array();

  for (int u = 0; u < n; ++u) {
    const VertexSet others = h.vertices().without(u);
    std::optional<VertexSet> missing;
    for_each_k_subset(others, r - 1, [&](VertexSet a) {
      if (!missing && !h.contains(a.with(u))) missing = a.with(u);
    });
    if (missing) {
      ordered_json ref;
      ref["vertex"] = u;
      ref["missing_edge"] = set_to_json(*missing);
      refutations.push_back(std::move(ref));
      continue;
    }

    std::vector<VertexSet> blocks;
    for (VertexSet e : h.edges()) {
      if (e.contains(u)) continue;
      std::uint64_t bits = e.bits();
      const std::uint64_t low = bits & ((std::uint64_t{1} << u) - 1);
      blocks.push_back(VertexSet::from_bits(low | ((bits >> 1) & ~((std::uint64_t{1} << u) - 1))));
    }
    Hypergraph block_hg = Hypergraph::make(n - 1, r, std::move(blocks));
    Certificate sc = verify_steiner(r - 1, r, n - 1, block_hg);
    if (sc.pass()) {
      stats["universal_vertex"] = u;
      stats["steiner_blocks"] = block_hg.edge_count();
      UniversalResult res;
      res.certificate = Certificate::make_pass("universal", std::move(stats), sha);
      res.universal_vertex = u;
      res.extracted = SteinerSystem{r - 1, r, std::move(block_hg)};
      return res;
    }
    ordered_json ref;
    ref["vertex"] = u;
    ref["steiner_failure"] = sc.witness;
    refutations.push_back(std::move(ref));
  }

  stats["candidates_checked"] = n;
  ordered_json w;
  w["candidates"] = std::move(refutations);
  return {Certificate::make_fail("universal", std::move(w), std::move(stats), sha), std::nullopt,
          std::nullopt};
}

Hypergraph build_m(int n, int k, int l) {
  if (n < 1 || n > 64 || k < 1 || k > n || l < 0 || k + l > n)
    throw InputError("build_m needs 1 <= k, 0 <= l, k + l <= n <= 64");
  const std::uint64_t low = (l == 0) ? 0 : VertexSet::range(l).bits();
  std::vector<VertexSet> edges;
  for_each_k_subset(VertexSet::range(n), k, [&](VertexSet s) {
    if ((s.bits() & low) != 0) edges.push_back(s);
  });
  return Hypergraph::make(n, k, std::move(edges));
}

Certificate verify_saturated(const Hypergraph& g, int l) {
  const std::string sha = hypergraph_sha256(g);
  const int n = g.n();
  const int k = g.r();
  if (l < 1 || k + l > n) throw InputError("verify_saturated needs 1 <= l and k + l <= n");
  if (binomial_u64(n, k + l) > (std::uint64_t{1} << 24))
    throw InputError("saturation scan too large to run exhaustively");

  ordered_json stats;
  stats["n"] = n;
  stats["k"] = k;
  stats["l"] = l;
  stats["edges"] = g.edge_count();

  std::uint64_t complete_scanned = 0;
  std::optional<VertexSet> bad_clique;
  for_each_k_subset(g.vertices(), k + l, [&](VertexSet w) {
    ++complete_scanned;
    if (bad_clique) return;
    bool all = true;
    for_each_k_subset(w, k, [&](VertexSet f) {
      if (all && !g.contains(f)) all = false;
    });
    if (all) bad_clique = w;
  });
  stats["complete_sets_scanned"] = complete_scanned;
  if (bad_clique) {
    ordered_json w;
    w["kind"] = "complete_configuration_present";
    w["witness_set"] = set_to_json(*bad_clique);
    return Certificate::make_fail("saturation", std::move(w), std::move(stats), sha);
  }

  std::uint64_t non_edges = 0;
  std::optional<VertexSet> stubborn;
  for_each_k_subset(g.vertices(), k, [&](VertexSet e) {
    if (stubborn || g.contains(e)) return;
    ++non_edges;
    bool creates = false;
    for_each_k_subset(g.vertices().minus(e), l, [&](VertexSet add) {
      if (creates) return;
      const VertexSet w = e | add;
      bool all = true;
      for_each_k_subset(w, k, [&](VertexSet f) {
        if (all && f != e && !g.contains(f)) all = false;
      });
      if (all) creates = true;
    });
    if (!creates) stubborn = e;
  });
  stats["non_edges_checked"] = non_edges;
  if (stubborn) {
    ordered_json w;
    w["kind"] = "non_edge_creates_nothing";
    w["non_edge"] = set_to_json(*stubborn);
    return Certificate::make_fail("saturation", std::move(w), std::move(stats), sha);
  }
  return Certificate::make_pass("saturation", std::move(stats), sha);
}

int shadow_bound(int r) {
  if (r < 2) throw InputError("shadow_bound needs r >= 2");
  return static_cast<int>((static_cast<long long>(r + 1) * (3 * r - 4)) / 6);
}

Certificate shadow_check(const Decomposition& d) {
  const Hypergraph hp = d.cliques_hypergraph();
  const std::string sha = hypergraph_sha256(hp);
  const int r = d.r();
  if (r < 3) {
    ordered_json w;
    w["reason"] = "shadow cap is stated for uniformity >= 3";
    ordered_json stats;
    stats["n"] = d.n();
    stats["r"] = r;
    return Certificate::make_error("shadow_degree", std::move(w), std::move(stats), sha);
  }
  const int bound = shadow_bound(r);

  ordered_json stats;
  stats["n"] = d.n();
  stats["r"] = r;
  stats["cliques"] = d.cliques.size();
  stats["bound"] = bound;

  std::uint64_t pairs = 0;
  int max_seen = 0;
  for (VertexSet q : d.cliques) {
    for (int z = 0; z < d.n(); ++z) {
      if (q.contains(z)) continue;
      ++pairs;
      std::vector<VertexSet> meeting;
      for (VertexSet q2 : d.cliques)
        if (q2.contains(z) && (q2 & q).count() == r - 1) meeting.push_back(q2);
      max_seen = std::max(max_seen, static_cast<int>(meeting.size()));
      if (static_cast<int>(meeting.size()) > bound) {
        stats["pairs_checked"] = pairs;
        ordered_json w;
        w["clique"] = set_to_json(q);
        w["outside_vertex"] = z;
        w["count"] = meeting.size();
        w["bound"] = bound;
        ordered_json mj = ordered_json::array();
        for (VertexSet m : meeting) mj.push_back(set_to_json(m));
        w["meeting_cliques"] = std::move(mj);
        return Certificate::make_fail("shadow_degree", std::move(w), std::move(stats), sha);
      }
    }
  }
  stats["pairs_checked"] = pairs;
  stats["max_count"] = max_seen;
  return Certificate::make_pass("shadow_degree", std::move(stats), sha);
}

}  // namespace friendship
