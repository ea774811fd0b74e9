#pragma once

#include <optional>

#include "friendship/certificate.hpp"
#include "friendship/hypergraph.hpp"

namespace friendship {

struct SearchOptions {
  int n = 0;
  int r = 3;
  std::optional<std::uint64_t> max_solutions;
  std::uint64_t node_budget = 100'000'000;
  bool symmetry_breaking = true;
  int jobs = 1;
};

// Outcome of an exhaustive branch-and-prune search for friendship
// r-hypergraphs on n labeled vertices, driven over the C(n, r+1) candidate
// cliques in canonical order (include branch first).  `exhausted` is true
// only when the whole tree was traversed with no cap binding, so an empty
// solution list then proves nonexistence (up to the symmetry-breaking
// convention when that is on).  Identical for any job count.
struct SearchOutcome {
  SearchOptions options;
  std::vector<std::vector<VertexSet>> solutions;  // clique lists, discovery order
  std::uint64_t nodes_visited = 0;
  bool exhausted = false;

  ordered_json to_json() const;
  Hypergraph solution_hypergraph(std::size_t i) const;
};

// Every recorded solution is expanded and re-verified against the
// friendship definition before it is emitted.
SearchOutcome search_friendship(const SearchOptions& opts);

// Cross-check an exhaustive outcome against independently known small
// cases: (n,2) for n <= 9 (windmills or nothing), (4,3) complete, the
// empty census at (5,3), (6,3), (7,3), and the 1080 labeled solutions at
// (8,3).  ERROR when the outcome is not exhaustive or no expectation is
// recorded for (n,r).
Certificate verify_solution_census(const SearchOutcome& out);

}  // namespace friendship
