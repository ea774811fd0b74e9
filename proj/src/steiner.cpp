#include "friendship/steiner.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "friendship/hg_io.hpp"

namespace friendship {

Certificate verify_steiner(int t, int k, int n, const Hypergraph& blocks) {
  if (t < 1 || t > k || k > n || n > 64) throw InputError("verify_steiner needs 1 <= t <= k <= n <= 64");
  if (blocks.n() != n || blocks.r() != k) throw InputError("block list does not match (k,n)");

  const std::string sha = hypergraph_sha256(blocks);
  std::uint64_t checked = 0;
  bool failed = false;
  VertexSet bad_t;
  std::vector<VertexSet> covering;

  for_each_k_subset(VertexSet::range(n), t, [&](VertexSet ts) {
    ++checked;
    if (failed) return;
    int count = 0;
    for (VertexSet b : blocks.edges())
      if (ts.subset_of(b)) ++count;
    if (count != 1) {
      failed = true;
      bad_t = ts;
      for (VertexSet b : blocks.edges())
        if (ts.subset_of(b)) covering.push_back(b);
    }
  });

  ordered_json stats;
  stats["t"] = t;
  stats["k"] = k;
  stats["n"] = n;
  stats["blocks"] = blocks.edge_count();
  stats["t_sets_checked"] = checked;

  if (!failed) return Certificate::make_pass("steiner", std::move(stats), sha);

  ordered_json witness;
  witness["t_set"] = set_to_json(bad_t);
  witness["count"] = covering.size();
  ordered_json cov = ordered_json::array();
  for (VertexSet b : covering) cov.push_back(set_to_json(b));
  witness["covering_blocks"] = std::move(cov);
  return Certificate::make_fail("steiner", std::move(witness), std::move(stats), sha);
}

Certificate verify_steiner(const SteinerSystem& s) {
  return verify_steiner(s.t, s.k, s.blocks.n(), s.blocks);
}

namespace {

SteinerSystem gated(int t, int k, int n, std::vector<VertexSet> blocks, const char* what) {
  SteinerSystem s{t, k, Hypergraph::make(n, k, std::move(blocks))};
  Certificate c = verify_steiner(s);
  if (!c.pass())
    throw InternalError(std::string("generated ") + what + " failed its Steiner self-check: " +
                        c.to_json().dump());
  return s;
}

// n = 6m+3.  Points Z_q x Z_3 with q = 2m+1, labeled (x,j) -> 3x+j.
SteinerSystem sts_bose(int n) {
  const int q = n / 3;
  auto pt = [](int x, int j) { return 3 * x + j; };
  const int half = (q + 1) / 2;  // 2*half == 1 (mod q)
  std::vector<VertexSet> blocks;
  for (int x = 0; x < q; ++x)
    blocks.push_back(VertexSet::of({pt(x, 0), pt(x, 1), pt(x, 2)}));
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y) {
      const int z = static_cast<int>((static_cast<long long>(x + y) * half) % q);
      for (int j = 0; j < 3; ++j)
        blocks.push_back(VertexSet::of({pt(x, j), pt(y, j), pt(z, (j + 1) % 3)}));
    }
  return gated(2, 3, n, std::move(blocks), "Bose STS");
}

// n = 6m+1, m >= 1.  Points Z_{2m} x Z_3 plus infinity = n-1, labeled
// (i,j) -> 3i+j, with the half-idempotent quasigroup x*y = pi(x+y mod 2m),
// pi(2i) = i, pi(2i+1) = m+i.
SteinerSystem sts_skolem(int n) {
  const int m = n / 6;
  const int tw = 2 * m;
  const int inf = n - 1;
  auto pt = [](int i, int j) { return 3 * i + j; };
  auto pi = [m](int e) { return (e % 2 == 0) ? e / 2 : m + (e - 1) / 2; };
  std::vector<VertexSet> blocks;
  for (int i = 0; i < m; ++i)
    blocks.push_back(VertexSet::of({pt(i, 0), pt(i, 1), pt(i, 2)}));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 3; ++j)
      blocks.push_back(VertexSet::of({inf, pt(m + i, j), pt(i, (j + 1) % 3)}));
  for (int x = 0; x < tw; ++x)
    for (int y = x + 1; y < tw; ++y) {
      const int z = pi((x + y) % tw);
      for (int j = 0; j < 3; ++j)
        blocks.push_back(VertexSet::of({pt(x, j), pt(y, j), pt(z, (j + 1) % 3)}));
    }
  return gated(2, 3, n, std::move(blocks), "Skolem STS");
}

}  // namespace

SteinerSystem sts(int n) {
  if (n < 3 || n > 64 || (n % 6 != 1 && n % 6 != 3))
    throw UnavailableError("S(2,3," + std::to_string(n) +
                           ") requires n == 1 or 3 (mod 6) with 3 <= n <= 64");
  return (n % 6 == 3) ? sts_bose(n) : sts_skolem(n);
}

SteinerSystem sqs8() {
  std::vector<VertexSet> blocks;
  for (int a = 1; a < 8; ++a)
    for (int c = 0; c < 2; ++c) {
      VertexSet b;
      for (int x = 0; x < 8; ++x)
        if (std::popcount(static_cast<unsigned>(a & x)) % 2 == c) b = b.with(x);
      blocks.push_back(b);
    }
  return gated(3, 4, 8, std::move(blocks), "SQS(8)");
}

SteinerSystem s_5_6_12() {
  // Generator [I6 | A] of the extended ternary Golay code: A has zero
  // diagonal border and a circulant (0,1,2,2,1) core.
  static constexpr std::array<std::array<int, 6>, 6> A = {{
      {0, 1, 1, 1, 1, 1},
      {1, 0, 1, 2, 2, 1},
      {1, 1, 0, 1, 2, 2},
      {1, 2, 1, 0, 1, 2},
      {1, 2, 2, 1, 0, 1},
      {1, 1, 2, 2, 1, 0},
  }};
  std::array<std::uint64_t, 13> weight_hist{};
  std::vector<VertexSet> supports;
  std::array<int, 6> msg{};
  for (int code = 0; code < 729; ++code) {
    int v = code;
    for (int i = 0; i < 6; ++i) {
      msg[static_cast<std::size_t>(i)] = v % 3;
      v /= 3;
    }
    VertexSet support;
    int weight = 0;
    for (int col = 0; col < 12; ++col) {
      int sum = 0;
      if (col < 6) {
        sum = msg[static_cast<std::size_t>(col)];
      } else {
        for (int i = 0; i < 6; ++i)
          sum += msg[static_cast<std::size_t>(i)] * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(col - 6)];
      }
      if (sum % 3 != 0) {
        support = support.with(col);
        ++weight;
      }
    }
    ++weight_hist[static_cast<std::size_t>(weight)];
    if (weight == 6) supports.push_back(support);
  }
  if (weight_hist[0] != 1 || weight_hist[6] != 264 || weight_hist[9] != 440 || weight_hist[12] != 24)
    throw InternalError("ternary Golay weight distribution is off");
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  if (supports.size() != 132) throw InternalError("expected 132 weight-6 supports");
  return gated(5, 6, 12, std::move(supports), "S(5,6,12)");
}

SteinerSystem make_steiner(int t, int k, int n) {
  if (t == 2 && k == 3) return sts(n);
  if (t == 3 && k == 4 && n == 8) return sqs8();
  if (t == 5 && k == 6 && n == 12) return s_5_6_12();
  throw UnavailableError("no generator for S(" + std::to_string(t) + "," + std::to_string(k) + "," +
                         std::to_string(n) + ") here (supported: S(2,3,n) for n == 1,3 mod 6, S(3,4,8), S(5,6,12))");
}

}  // namespace friendship
