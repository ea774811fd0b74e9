#include "friendship/bounds.hpp"

#include "friendship/hg_io.hpp"
#include "friendship/verify.hpp"

namespace friendship {

BigInt big_binomial(long long n, long long k) {
  if (n < 0) throw InputError("big_binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt floor_rat(const BigRat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt d = num / den;
  if (num < 0 && d * den != num) --d;
  return d;
}

BigInt ceil_rat(const BigRat& q) { return -floor_rat(-q); }

std::string rat_to_string(const BigRat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRat min_edges_bound(int n, int r) {
  if (r < 2 || n < r + 1) throw InputError("min_edges_bound needs r >= 2 and n >= r+1");
  return BigRat(r + 1, r) * BigRat(big_binomial(n - 1, r - 1));
}

BigRat max_cliques_bound(int n, int r) {
  if (r < 3 || n < r + 1) throw InputError("max_cliques_bound needs r >= 3 and n >= r+1");
  const int shadow = shadow_bound(r);
  const int path = (2 * (r + 1) + 2) / 3;  // ceil(2(r+1)/3)
  const BigRat first = BigRat(2, BigInt(r) * (r + 1) * (r + 1)) * shadow * BigRat(big_binomial(n, r));
  const BigRat second =
      BigRat(4, BigInt(r) * r * (r + 1) * (r + 1)) * path * BigRat(big_binomial(n, r - 1));
  return first + second;
}

BigRat max_edges_bound_raw(int n, int r) {
  const BigRat from_cliques = BigRat(r + 1) * max_cliques_bound(n, r);
  // The edge-form display: 2S/(r(r+1)) C(n,r) + 4P/(r^2(r+1)) C(n,r-1).
  const int shadow = shadow_bound(r);
  const int path = (2 * (r + 1) + 2) / 3;
  const BigRat direct = BigRat(2 * shadow, BigInt(r) * (r + 1)) * BigRat(big_binomial(n, r)) +
                        BigRat(4 * path, BigInt(r) * r * (r + 1)) * BigRat(big_binomial(n, r - 1));
  if (from_cliques != direct) throw InternalError("edge-bound forms disagree");
  return from_cliques;
}

BigInt max_edges_bound(int n, int r) { return BigInt(r + 1) * floor_rat(max_cliques_bound(n, r)); }

BigRat lrss_bound(int n) {
  if (n < 4) throw InputError("lrss_bound needs n >= 4");
  return BigRat(big_binomial(n, 3)) * BigRat(2 * (n - 3), 3 * n - 10);
}

std::pair<BigRat, BigRat> truncated_count(int r) {
  if (r < 2) throw InputError("truncated_count needs r >= 2");
  const BigRat incl_excl = BigRat(big_binomial(2 * r + 3, r), r + 1) -
                           BigRat(2) * BigRat(big_binomial(2 * r + 2, r - 1), r) +
                           BigRat(big_binomial(2 * r + 1, r - 2), r - 1);
  const BigRat direct(big_binomial(2 * r + 1, r), r + 3);
  if (incl_excl != direct) throw InternalError("truncated clique count forms disagree");
  return {incl_excl, direct};
}

BigRat truncated_clique_count(int r) { return truncated_count(r).second; }

ordered_json bounds_table(int r, int n_from, int n_to) {
  if (r < 3) throw InputError("bounds_table needs r >= 3");
  if (n_from < r + 1 || n_from > n_to || n_to > (1 << 20))
    throw InputError("bounds_table needs r+1 <= n_from <= n_to <= 2^20");
  ordered_json rows = ordered_json::array();
  for (int n = n_from; n <= n_to; ++n) {
    ordered_json row;
    row["n"] = n;
    const BigRat lo = min_edges_bound(n, r);
    row["min_edges"] = rat_to_string(lo);
    row["min_edges_ceil"] = ceil_rat(lo).str();
    const BigRat cl = max_cliques_bound(n, r);
    row["max_cliques"] = rat_to_string(cl);
    row["max_cliques_floor"] = floor_rat(cl).str();
    row["max_edges_raw"] = rat_to_string(max_edges_bound_raw(n, r));
    row["max_edges"] = max_edges_bound(n, r).str();
    if (r == 3) {
      const BigRat lrss = lrss_bound(n);
      row["lrss"] = rat_to_string(lrss);
      row["improves_on_lrss"] = max_edges_bound_raw(n, r) < lrss;
    } else {
      row["lrss"] = nullptr;
      row["improves_on_lrss"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  ordered_json out;
  out["r"] = r;
  out["n_from"] = n_from;
  out["n_to"] = n_to;
  out["rows"] = std::move(rows);
  return out;
}

ordered_json audit(const Hypergraph& h, int jobs) {
  ordered_json out;
  out["report"] = "audit";
  out["input_sha256"] = hypergraph_sha256(h);
  out["n"] = h.n();
  out["r"] = h.r();
  out["edges"] = h.edge_count();

  Certificate fcert = verify_friendship(h, jobs);
  out["friendship"] = fcert.to_json();
  if (!fcert.pass()) {
    out["status"] = "refused";
    return out;
  }
  out["status"] = "ok";

  DecomposeResult dec = decompose(h);
  if (!dec.decomposition)
    throw InternalError("friendship hypergraph failed to decompose: " + dec.certificate.to_json().dump());
  const Decomposition& d = *dec.decomposition;
  ordered_json dj;
  dj["certificate"] = dec.certificate.to_json();
  dj["cliques"] = d.cliques.size();
  dj["edges_are_r_plus_1_times_cliques"] =
      h.edge_count() == d.cliques.size() * static_cast<std::uint64_t>(h.r() + 1);
  out["decomposition"] = std::move(dj);

  UniversalResult uni = is_universal(h);
  ordered_json uj;
  uj["certificate"] = uni.certificate.to_json();
  uj["universal_vertex"] = uni.universal_vertex ? ordered_json(*uni.universal_vertex) : ordered_json(nullptr);
  out["universal"] = std::move(uj);

  const int n = h.n();
  const int r = h.r();
  ordered_json bj;
  const BigRat lo = min_edges_bound(n, r);
  bj["min_edges"] = rat_to_string(lo);
  const bool tight = BigRat(h.edge_count()) == lo;
  bj["min_is_attained"] = tight;
  if (r >= 3) {
    const BigRat cl = max_cliques_bound(n, r);
    bj["max_cliques"] = rat_to_string(cl);
    bj["max_cliques_floor"] = floor_rat(cl).str();
    bj["max_cliques_respected"] = BigRat(static_cast<std::uint64_t>(d.cliques.size())) <= cl;
    bj["max_edges"] = max_edges_bound(n, r).str();
    bj["max_edges_respected"] = BigInt(h.edge_count()) <= max_edges_bound(n, r);
  } else {
    bj["max_cliques"] = nullptr;
    bj["max_cliques_floor"] = nullptr;
    bj["max_cliques_respected"] = nullptr;
    bj["max_edges"] = nullptr;
    bj["max_edges_respected"] = nullptr;
  }
  out["bounds"] = std::move(bj);

  if (tight != uni.certificate.pass())
    throw InternalError("minimality and universality disagree on " + hypergraph_sha256(h));
  out["min_attained_iff_universal"] = true;

  const DegreeProfile prof = DegreeProfile::of(d.cliques_hypergraph(), r - 1);
  ordered_json gj;
  gj["k"] = r - 1;
  gj["min_degree"] = prof.min_degree();
  gj["max_degree"] = prof.max_degree();
  gj["all_equal"] = prof.min_degree() == prof.max_degree();
  out["clique_degrees"] = std::move(gj);

  const SociableReport soc = sociable_report(d);
  out["sociable"] = soc.to_json();
  if (tight) {
    // When the minimum is attained every (r-1)-set in a clique has clique
    // degree 1 or (n-r+1)/2.
    bool dichotomy = true;
    for (std::uint64_t deg : soc.sociable_degrees)
      if (BigRat(2) * deg != BigRat(n - r + 1)) dichotomy = false;
    out["tight_degree_dichotomy"] = dichotomy;
  } else {
    out["tight_degree_dichotomy"] = nullptr;
  }

  // The shadow cap is only stated for r >= 3.
  out["shadow"] = h.r() >= 3 ? ordered_json(shadow_check(d).to_json()) : ordered_json(nullptr);
  return out;
}

}  // namespace friendship
