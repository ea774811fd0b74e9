#pragma once

#include "friendship/certificate.hpp"
#include "friendship/hypergraph.hpp"

namespace friendship {

// An S(t,k,n): k-subsets of 0..n-1 covering every t-subset exactly once.
struct SteinerSystem {
  int t = 0;
  int k = 0;
  Hypergraph blocks;
};

// Exhaustive check of the defining property.  FAIL carries the first
// t-subset (canonical order) covered a wrong number of times, together with
// every block covering it.
Certificate verify_steiner(int t, int k, int n, const Hypergraph& blocks);
Certificate verify_steiner(const SteinerSystem& s);

// S(2,3,n) for n == 1,3 (mod 6): Bose construction for 6t+3, Skolem
// (half-idempotent quasigroup) construction for 6t+1, both with the point
// labeling (i,j) -> 3i+j and infinity -> n-1.  UnavailableError otherwise.
SteinerSystem sts(int n);

// S(3,4,8): the planes of AG(3,2) as parity classes of the 7 nonzero masks.
SteinerSystem sqs8();

// S(5,6,12): supports of the 264 weight-6 codewords of the extended ternary
// Golay [12,6,6] code (each support arises from a codeword and its negative,
// giving 132 blocks).
SteinerSystem s_5_6_12();

// Dispatch by parameters; UnavailableError when no generator applies.
SteinerSystem make_steiner(int t, int k, int n);

}  // namespace friendship
