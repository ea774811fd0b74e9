#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "friendship/errors.hpp"

namespace friendship {

// Vertices live in 0..63, so a vertex set is one machine word.  Comparing the
// raw words orders sets of equal size colexicographically; that ordering is
// the canonical one everywhere in this library.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet single(int v) {
    check_vertex(v);
    return from_bits(std::uint64_t{1} << v);
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  static VertexSet range(int n) {
    if (n < 0 || n > 64) throw InputError("vertex range size out of [0,64]");
    if (n == 64) return from_bits(~std::uint64_t{0});
    return from_bits((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  bool contains(int v) const {
    check_vertex(v);
    return (bits_ >> v) & 1;
  }

  VertexSet with(int v) const {
    check_vertex(v);
    return from_bits(bits_ | (std::uint64_t{1} << v));
  }

  VertexSet without(int v) const {
    check_vertex(v);
    return from_bits(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  int min_vertex() const {
    if (bits_ == 0) throw InputError("min_vertex of empty set");
    return std::countr_zero(bits_);
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each_vertex(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_indices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;

 private:
  static void check_vertex(int v) {
    if (v < 0 || v > 63) throw InputError("vertex index out of [0,63]");
  }

  std::uint64_t bits_ = 0;
};

// C(n,k) for n <= 64.  C(64,32) < 2^61, so every defined value fits; the
// running product stays exact because each prefix is itself a binomial.
inline std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > 64) throw InputError("binomial_u64 needs 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

namespace detail {

// Gosper's hack over a compact k-in-m bit space, with the compact word
// spread back through the positions of `ground`.  Spreading is monotone in
// the compact word, so subsets come out in increasing bits() order.
struct KSubsetCursor {
  std::array<std::uint8_t, 64> pos{};
  int m = 0;
  int k = 0;
  std::uint64_t remaining = 0;  // subsets not yet produced
  std::uint64_t compact = 0;

  KSubsetCursor(VertexSet ground, int k_in) : k(k_in) {
    if (k < 0) throw InputError("k_subsets needs k >= 0");
    int idx = 0;
    ground.for_each_vertex([&](int v) { pos[static_cast<std::size_t>(idx++)] = static_cast<std::uint8_t>(v); });
    m = idx;
    remaining = binomial_u64(m, k);
    compact = (k == 0) ? 0 : (k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1));
  }

  bool done() const { return remaining == 0; }

  VertexSet current() const {
    std::uint64_t mask = 0;
    for (std::uint64_t t = compact; t != 0; t &= t - 1)
      mask |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(t))];
    return VertexSet::from_bits(mask);
  }

  // Call only while !done(); the final advance just decrements the counter
  // (running Gosper past the top k-set would overflow).
  void advance() {
    --remaining;
    if (remaining == 0 || k == 0) return;
    std::uint64_t lo = compact & (~compact + 1);
    std::uint64_t up = compact + lo;
    compact = up | (((compact ^ up) / lo) >> 2);
  }
};

}  // namespace detail

template <typename F>
void for_each_k_subset(VertexSet ground, int k, F&& f) {
  detail::KSubsetCursor cur(ground, k);
  while (!cur.done()) {
    f(cur.current());
    cur.advance();
  }
}

// Input-range view over the k-subsets of `ground`, canonical order.
class KSubsetRange {
 public:
  KSubsetRange(VertexSet ground, int k) : ground_(ground), k_(k) {
    (void)detail::KSubsetCursor(ground, k);  // validate eagerly
  }

  class iterator {
   public:
    using value_type = VertexSet;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(VertexSet ground, int k) : cur_(ground, k) {}

    VertexSet operator*() const { return cur_.current(); }
    iterator& operator++() {
      cur_.advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return cur_.done(); }

   private:
    detail::KSubsetCursor cur_{VertexSet{}, 0};
  };

  iterator begin() const { return iterator(ground_, k_); }
  std::default_sentinel_t end() const { return {}; }

  std::vector<VertexSet> to_vector() const {
    std::vector<VertexSet> out;
    for_each_k_subset(ground_, k_, [&](VertexSet s) { out.push_back(s); });
    return out;
  }

 private:
  VertexSet ground_;
  int k_;
};

inline KSubsetRange k_subsets(VertexSet ground, int k) { return KSubsetRange(ground, k); }

// Rank of `s` among the k-subsets of {0..63} in canonical (colex) order,
// and its inverse.  Used to jump into the middle of an enumeration.
inline std::uint64_t k_subset_rank(VertexSet s) {
  std::uint64_t rank = 0;
  int seen = 0;
  s.for_each_vertex([&](int v) { rank += binomial_u64(v, ++seen); });
  return rank;
}

inline VertexSet k_subset_unrank(int k, std::uint64_t rank) {
  VertexSet out;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 <= 63 && binomial_u64(c + 1, i) <= rank) ++c;
    rank -= binomial_u64(c, i);
    out = out.with(c);
  }
  return out;
}

}  // namespace friendship
