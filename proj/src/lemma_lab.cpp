#include <array>

#include "friendship/hg_io.hpp"
#include "friendship/verify.hpp"

namespace friendship {

namespace {

struct PairTable {
  // Edge slots of K_n in canonical order: (0,1),(0,2),(1,2),(0,3),...
  std::array<std::array<int, 2>, 28> pairs{};
  int count = 0;

  explicit PairTable(int n) {
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a) pairs[static_cast<std::size_t>(count++)] = {a, b};
  }
};

ordered_json edges_to_json(std::uint32_t mask, const PairTable& pt) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < pt.count; ++i)
    if ((mask >> i) & 1) out.push_back(ordered_json::array({pt.pairs[static_cast<std::size_t>(i)][0],
                                                            pt.pairs[static_cast<std::size_t>(i)][1]}));
  return out;
}

void degrees_of(std::uint32_t mask, const PairTable& pt, std::array<int, 8>& deg) {
  deg.fill(0);
  for (int i = 0; i < pt.count; ++i)
    if ((mask >> i) & 1) {
      ++deg[static_cast<std::size_t>(pt.pairs[static_cast<std::size_t>(i)][0])];
      ++deg[static_cast<std::size_t>(pt.pairs[static_cast<std::size_t>(i)][1])];
    }
}

// First edge mask with `edges` bits satisfying `pred`, scanning masks of
// that popcount in increasing numeric order.
template <typename Pred>
std::optional<std::uint32_t> first_graph_with(int slots, int edges, Pred&& pred) {
  std::optional<std::uint32_t> hit;
  for_each_k_subset(VertexSet::range(slots), edges, [&](VertexSet s) {
    if (!hit && pred(static_cast<std::uint32_t>(s.bits()))) hit = static_cast<std::uint32_t>(s.bits());
  });
  return hit;
}

}  // namespace

Certificate check_path_components(int max_n) {
  if (max_n < 3 || max_n > 8) throw InputError("check_path_components covers 3 <= max_n <= 8");
  const std::string sha = sha256_hex("path_components(max_n=" + std::to_string(max_n) + ")");

  ordered_json per_n = ordered_json::array();
  for (int n = 3; n <= max_n; ++n) {
    const PairTable pt(n);
    auto qualifies = [&](std::uint32_t mask) {
      std::array<int, 8> deg;
      degrees_of(mask, pt, deg);
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 0) return false;
      for (int i = 0; i < pt.count; ++i)
        if ((mask >> i) & 1) {
          const auto& p = pt.pairs[static_cast<std::size_t>(i)];
          if (deg[static_cast<std::size_t>(p[0])] == 1 && deg[static_cast<std::size_t>(p[1])] == 1)
            return false;
        }
      return true;
    };

    const int required = (2 * n + 2) / 3;
    std::optional<std::uint32_t> extremal;
    int min_edges = -1;
    for (int m = 0; m <= pt.count; ++m) {
      extremal = first_graph_with(pt.count, m, qualifies);
      if (extremal) {
        min_edges = m;
        break;
      }
    }
    if (!extremal) throw InternalError("no qualifying graph found at all");

    ordered_json row;
    row["n"] = n;
    row["min_edges"] = min_edges;
    row["required"] = required;
    row["extremal"] = edges_to_json(*extremal, pt);
    per_n.push_back(row);

    if (min_edges < required) {
      ordered_json stats;
      stats["max_n"] = max_n;
      stats["per_n"] = std::move(per_n);
      ordered_json w;
      w["n"] = n;
      w["required"] = required;
      w["found"] = min_edges;
      w["graph"] = edges_to_json(*extremal, pt);
      return Certificate::make_fail("path_components", std::move(w), std::move(stats), sha);
    }
  }

  ordered_json stats;
  stats["max_n"] = max_n;
  stats["per_n"] = std::move(per_n);
  return Certificate::make_pass("path_components", std::move(stats), sha);
}

Certificate check_clique_complement(int max_r) {
  if (max_r < 3 || max_r > 7) throw InputError("check_clique_complement covers 3 <= max_r <= 7");
  const std::string sha = sha256_hex("clique_complement(max_r=" + std::to_string(max_r) + ")");

  ordered_json per_r = ordered_json::array();
  for (int r = 3; r <= max_r; ++r) {
    const int nverts = r + 1;
    const PairTable pt(nverts);
    auto qualifies = [&](std::uint32_t mask) {
      std::array<int, 8> deg;
      degrees_of(mask, pt, deg);
      for (int v = 0; v < nverts; ++v)
        if (deg[static_cast<std::size_t>(v)] > r - 1) return false;
      // vertices of degree exactly r-1 must be pairwise adjacent
      for (int a = 0; a < nverts; ++a)
        for (int b = a + 1; b < nverts; ++b) {
          if (deg[static_cast<std::size_t>(a)] != r - 1 || deg[static_cast<std::size_t>(b)] != r - 1)
            continue;
          bool adjacent = false;
          for (int i = 0; i < pt.count; ++i)
            if (((mask >> i) & 1) && pt.pairs[static_cast<std::size_t>(i)][0] == a &&
                pt.pairs[static_cast<std::size_t>(i)][1] == b)
              adjacent = true;
          if (!adjacent) return false;
        }
      return true;
    };

    const int expected = shadow_bound(r);
    std::optional<std::uint32_t> extremal;
    int max_edges = -1;
    for (int m = pt.count; m >= 0; --m) {
      extremal = first_graph_with(pt.count, m, qualifies);
      if (extremal) {
        max_edges = m;
        break;
      }
    }
    if (!extremal) throw InternalError("even the empty graph should qualify");

    ordered_json row;
    row["r"] = r;
    row["expected_max"] = expected;
    row["max_edges"] = max_edges;
    row["extremal"] = edges_to_json(*extremal, pt);
    per_r.push_back(row);

    if (max_edges != expected) {
      ordered_json stats;
      stats["max_r"] = max_r;
      stats["per_r"] = std::move(per_r);
      ordered_json w;
      w["r"] = r;
      w["expected"] = expected;
      w["found"] = max_edges;
      w["graph"] = edges_to_json(*extremal, pt);
      return Certificate::make_fail("clique_complement", std::move(w), std::move(stats), sha);
    }
  }

  ordered_json stats;
  stats["max_r"] = max_r;
  stats["per_r"] = std::move(per_r);
  return Certificate::make_pass("clique_complement", std::move(stats), sha);
}

}  // namespace friendship
