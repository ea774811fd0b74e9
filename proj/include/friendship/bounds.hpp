#pragma once

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "friendship/certificate.hpp"
#include "friendship/hypergraph.hpp"

namespace friendship {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_binomial(long long n, long long k);
BigInt floor_rat(const BigRat& q);
BigInt ceil_rat(const BigRat& q);
// "p" when integral, "p/q" otherwise (lowest terms).
std::string rat_to_string(const BigRat& q);

// Minimum edge count of a friendship r-hypergraph on n vertices:
// (r+1)/r * C(n-1, r-1), attained exactly by the universal construction.
BigRat min_edges_bound(int n, int r);

// Cap on the clique count of the decomposition of a friendship
// r-hypergraph, r >= 3:
//   2/(r(r+1)^2) * floor((r+1)(3r-4)/6) * C(n,r)
//     + 4/(r^2 (r+1)^2) * ceil(2(r+1)/3) * C(n,r-1).
BigRat max_cliques_bound(int n, int r);

// Edge form of the same cap.  The raw value is (r+1) * max_cliques_bound;
// since clique counts are integers, (r+1) * floor(max_cliques_bound) is the
// sharper integer cap and is what max_edges_bound returns.
BigRat max_edges_bound_raw(int n, int r);
BigInt max_edges_bound(int n, int r);

// Older comparison bound for r = 3: C(n,3) * 2(n-3)/(3n-10), n >= 4.
BigRat lrss_bound(int n);

// Clique count of the truncated construction, evaluated by two closed forms:
// first the inclusion-exclusion expression
//   C(2r+3,r)/(r+1) - 2*C(2r+2,r-1)/r + C(2r+1,r-2)/(r-1)
// and second the direct quotient C(2r+1,r)/(r+3).  Throws InternalError if
// they disagree.  The common value is an integer only when the divisibility
// precondition for the source block design holds (r = 2, 4, 8, 10, 11 below
// 13); a fractional value such as 35/6 at r = 3 certifies that no such
// design exists for that r.
std::pair<BigRat, BigRat> truncated_count(int r);

// The common (verified) value of the two forms above.
BigRat truncated_clique_count(int r);

// Per-n bound table for fixed r (pure arithmetic, no hypergraph needed).
ordered_json bounds_table(int r, int n_from, int n_to);

// Full structural report on one hypergraph: friendship certificate, then
// (when it passes) decomposition size, universality, bound tightness with
// the tight-iff-universal cross-check, clique-degree regularity, the
// sociable family, and the shadow cap.  Throws InternalError if the
// tightness cross-check ever disagrees.
ordered_json audit(const Hypergraph& h, int jobs = 1);

}  // namespace friendship
