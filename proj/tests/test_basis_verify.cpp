#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "springer/basis.hpp"
#include "springer/billey.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/polynomial.hpp"

using namespace springer;

namespace {

UniPoly mono(long c, int deg) { return UniPoly::monomial(Rat(c), deg); }

long long binom2(int n) { return (long long)n * (n - 1) / 2; }

// The D block as direct evaluation gives it: column 0 all -2t; columns
// k in {1, 2, n-2} have k zeros then 2(n-k-1)t^2; columns 3 <= k <= n-3
// split into two bands, 2(n-k+1)t^2 for the first k rows and 4(n-k)t^2
// below them.
std::vector<std::vector<UniPoly>> expected_d_block(int n) {
  const int sz = n - 1;
  std::vector<std::vector<UniPoly>> D(sz, std::vector<UniPoly>(sz));
  for (int r = 0; r < sz; ++r) D[r][0] = mono(-2, 1);
  for (int k = 1; k <= n - 2; ++k)
    for (int r = 0; r < sz; ++r) {
      if (k <= 2 || k == n - 2)
        D[r][k] = r < k ? UniPoly() : mono(2 * (n - k - 1), 2);
      else
        D[r][k] = r < k ? mono(2 * (n - k + 1), 2) : mono(4 * (n - k), 2);
    }
  return D;
}

}  // namespace

TEST_CASE("matrix assembly") {
  const RestrictionMatrix M = build_matrix(Partition({2, 2}));
  REQUIRE(M.size() == 6);
  CHECK(M.order.back() == Permutation({2, 4, 1, 3}));
  CHECK(M.rolls.back() == Permutation({1, 4, 2, 3}));
  CHECK(M.wts.weights == std::vector<int>{2, 4, 1, 3});
  // Diagonal entry of the longest fixed point: nonzero, degree 2.
  CHECK_FALSE(M.entries[5][5].is_zero());
  CHECK(M.entries[5][5].degree() == 2);
  // First row is the identity fixed point: 1 on rolldown identity columns,
  // zero wherever the rolldown is not the identity.
  for (int c = 0; c < 6; ++c)
    CHECK(M.entries[0][c] == (M.rolls[c].is_identity()
                                  ? UniPoly::constant(Rat(1))
                                  : UniPoly()));
}

TEST_CASE("column homogeneity") {
  for (const Partition& shape :
       {Partition({2, 2}), Partition({3, 2}), Partition({4, 2}),
        Partition({2, 2, 1})}) {
    const RestrictionMatrix M = build_matrix(shape);
    for (int c = 0; c < M.size(); ++c)
      for (int r = 0; r < M.size(); ++r)
        if (!M.entries[r][c].is_zero())
          CHECK(M.entries[r][c].degree() == (int)M.rolls[c].length());
  }
}

TEST_CASE("parallel assembly matches serial reference") {
  for (const Partition& shape : {Partition({3, 2}), Partition({4, 2})}) {
    const RestrictionMatrix P = build_matrix(shape);
    const RestrictionMatrix S = build_matrix_serial(shape);
    CHECK(P.order == S.order);
    CHECK(P.entries == S.entries);
  }
}

TEST_CASE("block extraction and the zero block") {
  for (int n : {6, 7}) {
    const RestrictionMatrix M = build_matrix(Partition({n - 2, 2}));
    const auto A = a_block(M), B = b_block(M), D = d_block(M);
    const int top = (int)binom2(n - 1);
    REQUIRE((int)A.size() == top);
    REQUIRE((int)A[0].size() == top);
    REQUIRE((int)B.size() == top);
    REQUIRE((int)B[0].size() == n - 1);
    REQUIRE((int)D.size() == n - 1);
    // Bottom-row columns restricted to top rows vanish identically.
    for (const auto& row : B)
      for (const auto& e : row) CHECK(e.is_zero());
  }
  CHECK_THROWS(d_block(build_matrix(Partition({2, 2, 1}))));
}

TEST_CASE("observed D block values") {
  for (int n : {6, 7, 8}) {
    const RestrictionMatrix M = build_matrix(Partition({n - 2, 2}));
    CHECK(d_block(M) == expected_d_block(n));
  }
}

TEST_CASE("closed form D block table") {
  const auto C6 = d_block_closed_form(6);
  REQUIRE(C6.size() == 5);
  for (int r = 0; r < 5; ++r) {
    CHECK(C6[r][0] == mono(-2, 1));
    CHECK(C6[r][4] == (r < 4 ? UniPoly() : mono(2, 2)));
  }
  const auto C7 = d_block_closed_form(7);
  for (int r = 0; r < 6; ++r)
    CHECK(C7[r][4] == (r < 4 ? mono(12, 2) : mono(20, 2)));
  CHECK_THROWS(d_block_closed_form(5));

  // The table's middle columns disagree with direct evaluation; the first
  // divergence sits at the top of column 3.
  for (int n : {6, 7, 8}) {
    const auto D = d_block(build_matrix(Partition({n - 2, 2})));
    const auto C = d_block_closed_form(n);
    CHECK(D != C);
    CHECK(D[0][3] == mono(2 * (n - 2), 2));
    CHECK(C[0][3] == mono(2 * n, 2));
    for (int k = 0; k <= 2; ++k)
      for (int r = 0; r < n - 1; ++r) CHECK(D[r][k] == C[r][k]);
  }
}

TEST_CASE("A block against the next smaller matrix") {
  for (int n : {5, 6, 7, 8}) {
    const ABlockComparison cmp =
        compare_a_block(build_matrix(Partition({n - 2, 2})));
    // Entry-for-entry equality of the projected polynomials fails (the two
    // matrices project along different weights); the unprojected
    // restrictions do embed exactly.
    CHECK_FALSE(cmp.literal);
    CHECK(cmp.unprojected);
  }
  CHECK_THROWS(compare_a_block(build_matrix(Partition({2, 2}))));
  CHECK_THROWS(compare_a_block(build_matrix(Partition({2, 2, 1}))));
}

TEST_CASE("full column rank with certificates") {
  for (int n = 4; n <= 8; ++n) {
    const RestrictionMatrix M = build_matrix(Partition({n - 2, 2}));
    const RankResult rk = is_full_column_rank(M);
    CHECK(rk.full_column_rank);
    CHECK(rk.rank == (int)binom2(n));
    REQUIRE(rk.minor.has_value());
    CHECK_FALSE(rk.minor->is_zero());
    CHECK((int)rk.minor_rows.size() == rk.rank);
    CHECK((int)rk.minor_cols.size() == rk.rank);
    CHECK(full_rank_at_one(M.entries));
  }
}

TEST_CASE("duplicated column is caught with a dependence certificate") {
  const RestrictionMatrix M = build_matrix(Partition({2, 2}));
  auto dup = M.entries;
  for (auto& row : dup) row[1] = row[0];
  const RankResult rk = polynomial_rank(dup);
  CHECK_FALSE(rk.full_column_rank);
  CHECK(rk.rank == 5);
  REQUIRE(rk.dependence.has_value());
  const auto& dep = *rk.dependence;
  REQUIRE((int)dep.size() == 6);
  CHECK_FALSE(dep[0].is_zero());
  CHECK(dep[0] == -dep[1]);
  for (int c = 2; c < 6; ++c) CHECK(dep[c].is_zero());
  // Re-verify the certificate against every row.
  for (const auto& row : dup) {
    UniPoly acc;
    for (int c = 0; c < 6; ++c) acc = acc + row[c] * dep[c];
    CHECK(acc.is_zero());
  }
  CHECK(polynomial_det(dup).is_zero());
  CHECK_FALSE(polynomial_det(M.entries).is_zero());
  CHECK_FALSE(full_rank_at_one(dup));
}

TEST_CASE("rolldown order versus bruhat order") {
  CHECK(check_upper_triangular(Partition({2, 2})).inequality_holds());
  CHECK(check_upper_triangular(Partition({3, 2})).inequality_holds());

  const TriangularReport r6 = check_upper_triangular(Partition({4, 2}));
  CHECK_FALSE(r6.inequality_holds());
  CHECK(r6.roll_leq_only.size() + r6.w_leq_only.size() == 3);
  bool seen = false;
  for (const auto& [w, u] : r6.roll_leq_only)
    if (w == Permutation({2, 4, 5, 1, 6, 3})) seen = true;
  for (const auto& [w, u] : r6.w_leq_only)
    if (w == Permutation({2, 4, 5, 1, 6, 3})) seen = true;
  CHECK(seen);

  const TriangularReport r7 = check_upper_triangular(Partition({5, 2}));
  CHECK_FALSE(r7.inequality_holds());
  CHECK(r7.roll_leq_only.size() + r7.w_leq_only.size() == 13);
}

TEST_CASE("change of basis columns") {
  for (int n : {6, 7, 8}) {
    const TriangularReport rep =
        check_upper_triangular(Partition({n - 2, 2}));
    REQUIRE((int)rep.columns.size() == n - 5);
    for (const BasisChangeColumn& col : rep.columns) {
      const int k = col.k;
      CHECK(k >= 3);
      CHECK(k <= n - 3);
      CHECK(col.top_entry == mono(2 * (n - k + 1), 2));
      // The multiple documented alongside the closed form never zeroes the
      // column; the exact multiple does, leaving k zeros and a constant
      // quadratic tail.
      CHECK_FALSE(col.documented_pattern_holds);
      CHECK(col.zeroing_multiple == mono(-(n - k + 1), 1));
      CHECK(col.zero_prefix == k);
      CHECK(col.tail ==
            std::vector<UniPoly>(n - 1 - k, mono(2 * (n - k - 1), 2)));
    }
  }
  CHECK(check_upper_triangular(Partition({3, 2})).columns.empty());
}
