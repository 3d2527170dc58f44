#pragma once
// Dimension pairs of row-strict fillings, the top-parts vector, omega, the
// rolldown map, Betti numbers, and the canonical fixed-point table.

#include <vector>

#include "springer/filling.hpp"
#include "springer/hessenberg.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"

namespace springer {

struct DimPair {
  int a = 0, b = 0;  // b > a
  friend auto operator<=>(const DimPair&, const DimPair&) = default;
};

// All pairs (a, b) with b > a such that b's box is either strictly below
// a's in the same column or anywhere in a column strictly left of a's, and
// b does not exceed a's right neighbor when a has one. Defined on
// row-strict fillings only; rejects anything else.
std::vector<DimPair> dimension_pairs(const Filling& T);

// x[l-2] counts pairs with top part l, for l = 2..n. Each count is at most
// l-1 (asserted; a violation is a bug, not an input error).
std::vector<int> top_parts(const std::vector<DimPair>& pairs, int n);

// omega(x) = u_2 u_3 .. u_n with u_l = s_{l-1} s_{l-2} .. s_{l-x_l}. The
// concatenation is reduced, so the length is sum(x).
Permutation omega(const std::vector<int>& x);

// roll(w) = omega(x)^{-1} for the top-parts vector of w's filling (the
// filling T with sigma_read(T, sigma) = w^{-1}). Rejects w that is not a
// fixed point, i.e. whose filling is not row-strict.
Permutation rolldown(const Permutation& w, const Partition& shape,
                     const Permutation& sigma);

// b_k = number of row-strict fillings with exactly k dimension pairs.
std::vector<long long> betti_numbers(const Partition& shape);

// The filling of (n-2, 2) with bottom row [k, n] and top row the rest in
// increasing order, 1 <= k <= n-1.
Filling bottom_row_filling(int n, int k);

// Fixed-point enumeration order used by tables and restriction matrices.
// Two-row shapes (m, 2): the pinned (2, 2) base, then recursively the
// (m-1, 2) list with n appended to each top row, followed by the n-1
// bottom-row fillings for k = 1..n-1. Other shapes: row-strict fillings
// sorted by the one-line word of their fixed point under sigma.
std::vector<Filling> canonical_filling_order(const Partition& shape,
                                             const Permutation& sigma);

struct PinballRow {
  Permutation w;
  Filling filling;
  std::vector<DimPair> dim_pairs;
  int deg = 0;
  Permutation omega;
  Permutation roll;
};

// One row per fixed point, in canonical order.
std::vector<PinballRow> pinball_table(const Partition& shape,
                                      const Permutation& sigma);

}  // namespace springer
