#include <doctest.h>

#include <set>

#include "friendship/bounds.hpp"
#include "friendship/constructions.hpp"

using namespace friendship;

TEST_CASE("big binomials agree with the word-sized ones and extend past them") {
  for (int n = 0; n <= 64; ++n)
    for (int k = 0; k <= n; k += (n > 20 ? 7 : 1))
      CHECK(big_binomial(n, k) == BigInt(binomial_u64(n, k)));
  CHECK(big_binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(big_binomial(10, 11) == 0);
  CHECK(big_binomial(10, -1) == 0);
}

TEST_CASE("rational helpers") {
  CHECK(floor_rat(BigRat(7, 2)) == 3);
  CHECK(floor_rat(BigRat(-7, 2)) == -4);
  CHECK(floor_rat(BigRat(6)) == 6);
  CHECK(ceil_rat(BigRat(7, 2)) == 4);
  CHECK(ceil_rat(BigRat(-7, 2)) == -3);
  CHECK(ceil_rat(BigRat(6)) == 6);
  CHECK(rat_to_string(BigRat(28)) == "28");
  CHECK(rat_to_string(BigRat(462, 25)) == "462/25");
  CHECK(rat_to_string(BigRat(4, 2)) == "2");
}

TEST_CASE("frozen bound values") {
  CHECK(min_edges_bound(8, 3) == BigRat(28));
  CHECK(min_edges_bound(10, 3) == BigRat(48));
  CHECK(min_edges_bound(9, 4) == BigRat(70));
  CHECK(min_edges_bound(14, 3) == BigRat(104));
  CHECK(max_cliques_bound(9, 4) == BigRat(462, 25));
  CHECK(floor_rat(max_cliques_bound(9, 4)) == 18);
  CHECK(max_edges_bound(9, 4) == BigInt(90));
  CHECK(lrss_bound(8) == BigRat(40));
  CHECK(lrss_bound(16) == BigRat(7280, 19));
}

TEST_CASE("r = 3 bound identities") {
  // For triple systems the clique cap is n^2(n-1)/48 and the raw edge cap
  // n^2(n-1)/12.
  for (int n = 4; n <= 64; ++n) {
    const BigRat n2n1(BigInt(n) * n * (n - 1));
    CHECK(max_cliques_bound(n, 3) == n2n1 / 48);
    CHECK(max_edges_bound_raw(n, 3) == n2n1 / 12);
    CHECK(max_edges_bound(n, 3) == 4 * floor_rat(n2n1 / 48));
  }
}

TEST_CASE("the edge cap improves on the earlier r = 3 bound from n = 7 on") {
  CHECK(max_edges_bound_raw(4, 3) == lrss_bound(4));
  CHECK(max_edges_bound_raw(5, 3) > lrss_bound(5));
  CHECK(max_edges_bound_raw(6, 3) == lrss_bound(6));
  for (int n = 7; n <= 64; ++n) CHECK(max_edges_bound_raw(n, 3) < lrss_bound(n));
  CHECK_THROWS_AS(lrss_bound(3), InputError);
}

TEST_CASE("bounds need sane parameters") {
  CHECK_THROWS_AS(min_edges_bound(4, 1), InputError);
  CHECK_THROWS_AS(min_edges_bound(3, 3), InputError);
  CHECK_THROWS_AS(max_cliques_bound(8, 2), InputError);
  CHECK_THROWS_AS(max_edges_bound(8, 2), InputError);
  // The bounds are pure arithmetic: they extend past the n <= 64 world the
  // hypergraph structures live in.
  CHECK(min_edges_bound(100, 3) == BigRat(4, 3) * BigRat(big_binomial(99, 2)));
}

TEST_CASE("bounds grow with n") {
  for (int n = 5; n <= 20; ++n) {
    CHECK(min_edges_bound(n + 1, 3) > min_edges_bound(n, 3));
    CHECK(max_edges_bound(n + 1, 3) >= max_edges_bound(n, 3));
    CHECK(min_edges_bound(n, 3) <= max_edges_bound_raw(n, 3));
  }
}

TEST_CASE("truncated clique count: forms agree, integrality tracks design existence") {
  // The two closed forms are one algebraic identity, so they agree for every
  // r.  The common value is an integer exactly when (r+3) | C(2r+1,r); a
  // fractional count rules the source design out, e.g. 35/6 at r = 3.
  const std::set<int> integral = {2, 4, 8, 10, 11};
  for (int r = 2; r <= 12; ++r) {
    auto [incl_excl, direct] = truncated_count(r);
    CHECK(incl_excl == direct);
    CHECK((denominator(incl_excl) == 1) == (integral.count(r) == 1));
  }
  CHECK(truncated_clique_count(2) == BigRat(2));
  CHECK(truncated_clique_count(3) == BigRat(35, 6));
  CHECK(truncated_clique_count(4) == BigRat(18));
  CHECK(truncated_clique_count(10) == BigRat(27132));
}

TEST_CASE("bounds table carries the comparison columns only for r = 3") {
  auto t3 = bounds_table(3, 4, 12);
  CHECK(t3["r"] == 3);
  CHECK(t3["rows"].size() == 9);
  for (const auto& row : t3["rows"]) {
    CHECK(!row["lrss"].is_null());
    CHECK(!row["improves_on_lrss"].is_null());
    CHECK(row.contains("min_edges"));
    CHECK(row.contains("max_cliques"));
    CHECK(row.contains("max_cliques_floor"));
    CHECK(row.contains("max_edges_raw"));
    CHECK(row.contains("max_edges"));
  }
  CHECK(t3["rows"][4]["n"] == 8);
  CHECK(t3["rows"][4]["min_edges"] == "28");

  auto t4 = bounds_table(4, 9, 10);
  CHECK(t4["rows"].size() == 2);
  CHECK(t4["rows"][0]["lrss"].is_null());
  CHECK(t4["rows"][0]["max_cliques"] == "462/25");
  CHECK(t4["rows"][0]["max_edges"] == "90");
  CHECK_THROWS_AS(bounds_table(3, 10, 9), InputError);
}

TEST_CASE("audit cross-checks structure against the bounds") {
  auto a = audit(universal(sts(7)));
  CHECK(a["status"] == "ok");
  CHECK(a["friendship"]["verdict"] == "PASS");
  CHECK(a["decomposition"]["cliques"] == 7);
  CHECK(a["decomposition"]["edges_are_r_plus_1_times_cliques"] == true);
  CHECK(a["universal"]["universal_vertex"] == 7);
  CHECK(a["bounds"]["min_edges"] == "28");
  CHECK(a["bounds"]["min_is_attained"] == true);
  CHECK(a["bounds"]["max_edges_respected"] == true);
  CHECK(a["min_attained_iff_universal"] == true);
  CHECK(a["clique_degrees"]["all_equal"] == false);
  CHECK(a["sociable"]["sociable_count"] == 7);
  CHECK(a["sociable"]["star_center"] == 7);
  CHECK(a["tight_degree_dichotomy"] == true);
  CHECK(a["shadow"]["verdict"] == "PASS");

  auto c = audit(cube(3));
  CHECK(c["bounds"]["min_is_attained"] == false);
  CHECK(c["universal"]["universal_vertex"].is_null());
  CHECK(c["tight_degree_dichotomy"].is_null());
  CHECK(c["shadow"]["verdict"] == "PASS");

  auto t = audit(truncated(4));
  CHECK(t["decomposition"]["cliques"] == 18);
  CHECK(t["bounds"]["max_cliques_floor"] == "18");
  CHECK(t["bounds"]["max_cliques_respected"] == true);
  CHECK(t["bounds"]["max_edges"] == "90");
  CHECK(t["bounds"]["max_edges_respected"] == true);
  CHECK(t["sociable"]["star_center"].is_null());

  // A 2-uniform input gets no r >= 3 machinery but still audits.
  auto w = audit(truncated(2));
  CHECK(w["status"] == "ok");
  CHECK(w["bounds"]["max_cliques"].is_null());
  CHECK(w["shadow"].is_null());

  // Refusal path: a non-friendship hypergraph stops at the first check.
  auto bad = audit(complete_hypergraph(5, 3));
  CHECK(bad["status"] == "refused");
  CHECK(bad["friendship"]["verdict"] == "FAIL");
  CHECK(!bad.contains("decomposition"));
}

TEST_CASE("minimum is attained exactly on the universal corpus") {
  CHECK(audit(universal(sts(9)))["bounds"]["min_is_attained"] == true);
  CHECK(audit(universal(sqs8()))["bounds"]["min_is_attained"] == true);
  CHECK(audit(cube(4))["bounds"]["min_is_attained"] == false);
  CHECK(audit(truncated(4))["bounds"]["min_is_attained"] == false);
}
