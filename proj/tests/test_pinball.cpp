#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "springer/filling.hpp"
#include "springer/hessenberg.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/pinball.hpp"

using namespace springer;

namespace {

std::mt19937 rng(192837);

using Pairs = std::vector<DimPair>;

long long binom2(int n) { return (long long)n * (n - 1) / 2; }

}  // namespace

TEST_CASE("dimension pairs") {
  const Partition square({2, 2});
  CHECK(dimension_pairs(Filling(square, {{1, 3}, {2, 4}})) ==
        Pairs{{1, 2}, {3, 4}});
  CHECK(dimension_pairs(Filling(square, {{1, 2}, {3, 4}})) ==
        Pairs{{2, 3}, {2, 4}});
  CHECK(dimension_pairs(Filling(square, {{2, 4}, {1, 3}})).empty());
  CHECK_THROWS(dimension_pairs(Filling(square, {{2, 1}, {3, 4}})));

  // Bottom row [5,6] of (4,2): tops in the bottom row, both over 4.
  CHECK(dimension_pairs(Filling(Partition({4, 2}),
                                {{1, 2, 3, 4}, {5, 6}})) ==
        Pairs{{4, 5}, {4, 6}});
}

TEST_CASE("top parts") {
  CHECK(top_parts(Pairs{{1, 2}, {3, 4}}, 4) == std::vector<int>{1, 0, 1});
  CHECK(top_parts(Pairs{}, 4) == std::vector<int>{0, 0, 0});
  CHECK(top_parts(Pairs{{2, 3}, {2, 4}}, 4) == std::vector<int>{0, 1, 1});

  for (const auto& T : all_fillings(Partition({3, 2}))) {
    if (T.entry(1, 1) > T.entry(1, 2)) continue;  // keep it row-strict
    if (T.entry(1, 2) > T.entry(1, 3)) continue;
    if (T.entry(2, 1) > T.entry(2, 2)) continue;
    const auto D = dimension_pairs(T);
    const auto x = top_parts(D, 5);
    CHECK((int)x.size() == 4);
    int sum = 0;
    for (int l = 2; l <= 5; ++l) {
      CHECK(x[l - 2] <= l - 1);
      sum += x[l - 2];
    }
    CHECK(sum == (int)D.size());
  }
}

TEST_CASE("omega") {
  CHECK(omega({0, 1, 1}) == Permutation({1, 3, 4, 2}));
  CHECK(omega({0, 0, 0}) == Permutation::identity(4));
  CHECK(omega({0, 0, 1, 1}) == Permutation({1, 2, 4, 5, 3}));
  CHECK_THROWS(omega({2, 0, 0}));   // x_2 > 1
  CHECK_THROWS(omega({0, -1, 0}));

  // The concatenation u_2 .. u_n is reduced.
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> x(7);
    int sum = 0;
    for (int l = 2; l <= 8; ++l) {
      x[l - 2] = std::uniform_int_distribution<int>(0, l - 1)(rng);
      sum += x[l - 2];
    }
    CHECK(omega(x).length() == sum);
  }
}

TEST_CASE("rolldown examples") {
  const Partition square({2, 2});
  const Permutation s22 = rotated_english_sigma(square);
  CHECK(rolldown(Permutation({2, 4, 1, 3}), square, s22) ==
        Permutation({1, 4, 2, 3}));
  CHECK(rolldown(Permutation::identity(4), square, s22) ==
        Permutation::identity(4));

  const Partition shape32({3, 2});
  const Permutation s32 = rotated_english_sigma(shape32);
  CHECK(rolldown(Permutation({2, 4, 1, 5, 3}), shape32, s32) ==
        Permutation({1, 3, 2, 5, 4}));

  CHECK_THROWS(rolldown(Permutation({3, 4, 1, 2}), square, s22));
}

TEST_CASE("betti numbers") {
  CHECK(betti_numbers(Partition({2, 2})) == std::vector<long long>{1, 3, 2});
  CHECK(betti_numbers(Partition({3, 2})) == std::vector<long long>{1, 4, 5});
  CHECK(betti_numbers(Partition({6})) == std::vector<long long>{1});
  CHECK(betti_numbers(Partition({1})) == std::vector<long long>{1});

  for (int n = 4; n <= 9; ++n) {
    const auto b = betti_numbers(Partition({n - 2, 2}));
    long long sum = 0;
    for (long long v : b) sum += v;
    CHECK(sum == binom2(n));
  }
}

TEST_CASE("degree consistency and reduced rolldowns") {
  const std::vector<Partition> shapes{
      Partition({2, 2}),    Partition({3, 1}),   Partition({2, 1, 1}),
      Partition({3, 2}),    Partition({2, 2, 1}), Partition({3, 2, 1}),
      Partition({4, 2}),    Partition({2, 2, 2}), Partition({3, 3}),
      Partition({5, 2}),    Partition({6, 2})};
  for (const Partition& shape : shapes) {
    const int n = shape.n();
    for (const Permutation& sigma :
         {rotated_english_sigma(shape), Permutation::identity(n)}) {
      for (const auto& T : permissible_fillings(shape, identity_h(n))) {
        const Permutation w = fixed_point_of_filling(T, sigma);
        const Permutation roll = rolldown(w, shape, sigma);
        CHECK((int)roll.length() == (int)dimension_pairs(T).size());
      }
    }
  }
}

TEST_CASE("rolldown injectivity on two-row shapes") {
  for (int n = 4; n <= 8; ++n) {
    const Partition shape({n - 2, 2});
    const Permutation sigma = rotated_english_sigma(shape);
    std::set<std::vector<int>> rolls;
    for (const auto& T : permissible_fillings(shape, identity_h(n))) {
      const Permutation w = fixed_point_of_filling(T, sigma);
      rolls.insert(rolldown(w, shape, sigma).oneline());
    }
    CHECK((long long)rolls.size() == binom2(n));
  }
}

TEST_CASE("bottom row fillings and their rolldowns") {
  const int n = 6;
  const Partition shape({4, 2});
  const Permutation sigma = rotated_english_sigma(shape);

  CHECK(bottom_row_filling(6, 3) ==
        Filling(shape, {{1, 2, 4, 5}, {3, 6}}));
  CHECK_THROWS(bottom_row_filling(6, 6));  // bottom row [6,6] impossible

  const std::vector<std::vector<int>> want_w{{1, 2, 4, 5, 6, 3},
                                             {2, 1, 4, 5, 6, 3},
                                             {2, 4, 1, 5, 6, 3},
                                             {2, 4, 5, 1, 6, 3},
                                             {2, 4, 5, 6, 1, 3}};
  const Permutation last = Permutation::transposition(n, n - 1);
  std::vector<Permutation> ws;
  for (int k = 1; k <= n - 1; ++k) {
    const Filling T = bottom_row_filling(n, k);
    CHECK(T.entry(2, 1) == k);
    CHECK(T.entry(2, 2) == n);
    const Permutation w = fixed_point_of_filling(T, sigma);
    CHECK(w.oneline() == want_w[k - 1]);
    const Permutation roll = rolldown(w, shape, sigma);
    const Permutation want_roll =
        k == 1 ? last : last * Permutation::transposition(n, k - 1);
    CHECK(roll == want_roll);
    ws.push_back(w);
  }
  // The five fixed points form a Bruhat chain.
  for (int i = 0; i + 1 < (int)ws.size(); ++i)
    CHECK(bruhat_leq(ws[i], ws[i + 1]));
}

TEST_CASE("canonical order embeds recursively for two-row shapes") {
  for (int n = 6; n <= 7; ++n) {
    const Partition shape({n - 2, 2});
    const Partition prev({n - 3, 2});
    const auto order = canonical_filling_order(shape,
                                               rotated_english_sigma(shape));
    const auto smaller = canonical_filling_order(prev,
                                                 rotated_english_sigma(prev));
    REQUIRE((long long)order.size() == binom2(n));
    // Head: the (n-1)-point list with n appended to each top row.
    for (int i = 0; i < (int)smaller.size(); ++i) {
      std::vector<std::vector<int>> rows = smaller[i].rows();
      rows[0].push_back(n);
      CHECK(order[i] == Filling(shape, rows));
    }
    // Tail: bottom rows [k, n] for k = 1..n-1.
    for (int k = 1; k <= n - 1; ++k)
      CHECK(order[smaller.size() + k - 1] == bottom_row_filling(n, k));
  }
}

TEST_CASE("pinball table matches the published rows") {
  const auto t1 = pinball_table(Partition({2, 2}),
                                rotated_english_sigma(Partition({2, 2})));
  REQUIRE(t1.size() == 6);
  CHECK(t1.front().w == Permutation::identity(4));
  CHECK(t1.front().filling == Filling(Partition({2, 2}), {{2, 4}, {1, 3}}));
  CHECK(t1.front().deg == 0);
  CHECK(t1.front().roll == Permutation::identity(4));
  const PinballRow& r6 = t1.back();
  CHECK(r6.w == Permutation({2, 4, 1, 3}));
  CHECK(r6.filling == Filling(Partition({2, 2}), {{1, 2}, {3, 4}}));
  CHECK(r6.dim_pairs == Pairs{{2, 3}, {2, 4}});
  CHECK(r6.deg == 2);
  CHECK(r6.omega == Permutation({1, 3, 4, 2}));
  CHECK(r6.roll == Permutation({1, 4, 2, 3}));

  const auto t2 = pinball_table(Partition({3, 2}),
                                rotated_english_sigma(Partition({3, 2})));
  REQUIRE(t2.size() == 10);
  const PinballRow& q6 = t2[5];
  CHECK(q6.w == Permutation({2, 4, 1, 3, 5}));
  CHECK(q6.filling == Filling(Partition({3, 2}), {{1, 2, 5}, {3, 4}}));
  CHECK(q6.dim_pairs == Pairs{{2, 3}, {2, 4}});
  CHECK(q6.omega == Permutation({1, 3, 4, 2, 5}));
  CHECK(q6.roll == Permutation({1, 4, 2, 3, 5}));
  const PinballRow& q10 = t2.back();
  CHECK(q10.w == Permutation({2, 4, 5, 1, 3}));
  CHECK(q10.filling == Filling(Partition({3, 2}), {{1, 2, 3}, {4, 5}}));
  CHECK(q10.dim_pairs == Pairs{{3, 4}, {3, 5}});
  CHECK(q10.omega == Permutation({1, 2, 4, 5, 3}));
  CHECK(q10.roll == Permutation({1, 2, 5, 3, 4}));

  // Degrees tally to the Betti numbers.
  std::map<int, long long> count;
  for (const auto& row : t2) ++count[row.deg];
  const auto b = betti_numbers(Partition({3, 2}));
  for (int k = 0; k < (int)b.size(); ++k) CHECK(count[k] == b[k]);
}
