#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "springer/billey.hpp"
#include "springer/hessenberg.hpp"
#include "springer/nilmatrix.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/pinball.hpp"
#include "springer/polynomial.hpp"

using namespace springer;

namespace {

std::mt19937 rng(424242);

Permutation random_perm(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

// A uniform-ish reduced word built by repeatedly stripping a random right
// descent.
std::vector<int> random_reduced_word(Permutation w) {
  std::vector<int> picked;
  while (!w.is_identity()) {
    std::vector<int> descents;
    for (int i = 1; i < w.n(); ++i)
      if (w(i) > w(i + 1)) descents.push_back(i);
    const int i =
        descents[std::uniform_int_distribution<size_t>(0, descents.size() - 1)(
            rng)];
    picked.push_back(i);
    w = w * Permutation::transposition(w.n(), i);
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

MultiPoly lin(int n, std::initializer_list<std::pair<int, int>> coeffs) {
  LinForm f(n);
  for (const auto& [i, c] : coeffs) f.set(i, Rat(c));
  return MultiPoly::from_lin(f);
}

std::vector<Rat> descending_values(int n) {
  std::vector<Rat> t(n);
  for (int i = 0; i < n; ++i) t[i] = Rat(n - i);  // t_i = n+1-i
  return t;
}

Permutation s(int n, int i) { return Permutation::transposition(n, i); }

}  // namespace

TEST_CASE("restriction examples") {
  const int n = 6;
  CHECK(schubert_restrict(s(n, 5), Permutation::from_letters(n, {3, 4, 5})) ==
        lin(n, {{3, 1}, {6, -1}}));
  CHECK(schubert_restrict(s(n, 5) * s(n, 1),
                          Permutation::from_letters(n, {3, 4, 5, 1})) ==
        lin(n, {{3, 1}, {6, -1}}) * lin(n, {{1, 1}, {2, -1}}));
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation w = random_perm(5);
    CHECK(schubert_restrict(Permutation::identity(5), w) ==
          MultiPoly::constant(5, Rat(1)));
  }
  CHECK_THROWS(schubert_restrict(Permutation::identity(4), random_perm(5)));
}

TEST_CASE("diagonal restrictions") {
  CHECK(schubert_restrict(s(3, 1), s(3, 1)) == lin(3, {{1, 1}, {2, -1}}));
  // 231 = s_1 s_2: prefix-applied roots are t_1-t_2 then s_1(t_2-t_3).
  const Permutation v231({2, 3, 1});
  CHECK(schubert_restrict(v231, v231) ==
        lin(3, {{1, 1}, {2, -1}}) * lin(3, {{1, 1}, {3, -1}}));
  const Permutation v312({3, 1, 2});
  CHECK(schubert_restrict(v312, v312) ==
        lin(3, {{2, 1}, {3, -1}}) * lin(3, {{1, 1}, {3, -1}}));
}

TEST_CASE("vanishing, positivity, homogeneity") {
  const int n = 6;
  const auto tvals = descending_values(n);
  int nonzero_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation v = random_perm(n), w = random_perm(n);
    const MultiPoly p = schubert_restrict(v, w);
    if (!bruhat_leq(v, w)) {
      CHECK(p.is_zero());
      continue;
    }
    ++nonzero_seen;
    REQUIRE_FALSE(p.is_zero());
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == v.length());
    CHECK(p.eval(tvals) > 0);  // every term is a product of positive roots
  }
  CHECK(nonzero_seen > 0);
}

TEST_CASE("independence of the reduced word") {
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation v = random_perm(5), w = random_perm(5);
    const MultiPoly base = schubert_restrict(v, w);
    CHECK(schubert_restrict(v, w, random_reduced_word(w)) == base);
    CHECK(schubert_restrict(v, w, random_reduced_word(w)) == base);
  }
  CHECK_THROWS(schubert_restrict(s(4, 1), s(4, 1) * s(4, 2), {1}));
  CHECK_THROWS(schubert_restrict(s(4, 1), s(4, 1), {2, 1, 2}));
}

TEST_CASE("bottom row points all restrict s_(n-1) to the same root") {
  for (int n : {6, 7}) {
    const Partition shape({n - 2, 2});
    const Permutation sigma = rotated_english_sigma(shape);
    const MultiPoly expect = lin(n, {{3, 1}, {n, -1}});
    for (int k = 1; k <= n - 1; ++k) {
      const Permutation u =
          fixed_point_of_filling(bottom_row_filling(n, k), sigma);
      CHECK(schubert_restrict(s(n, n - 1), u) == expect);
    }
  }
}

TEST_CASE("projection to one parameter") {
  const WeightAssignment wts =
      circle_weights(Partition({4, 2}), Permutation({2, 4, 5, 6, 1, 3}));
  REQUIRE(wts.weights == std::vector<int>{2, 6, 1, 5, 4, 3});
  CHECK(project_s1(lin(6, {{3, 1}, {6, -1}}), wts) ==
        UniPoly::monomial(Rat(-2), 1));
  CHECK(project_s1(lin(6, {{3, 1}, {6, -1}}) * lin(6, {{1, 1}, {2, -1}}), wts) ==
        UniPoly::monomial(Rat(8), 2));
  CHECK(project_s1(MultiPoly(6), wts).is_zero());
  CHECK_THROWS(project_s1(MultiPoly(5), wts));

  // Ring map: projection of a product is the product of projections.
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation v1 = random_perm(6), v2 = random_perm(6);
    const MultiPoly p = schubert_restrict(v1, random_perm(6));
    const MultiPoly q = schubert_restrict(v2, random_perm(6));
    CHECK(project_s1(p * q, wts) == project_s1(p, wts) * project_s1(q, wts));
  }
}

TEST_CASE("projected restrictions at bottom row points") {
  const int n = 6;
  const Partition shape({n - 2, 2});
  const Permutation sigma = rotated_english_sigma(shape);
  const WeightAssignment wts = circle_weights(shape, sigma);

  std::vector<Permutation> pts;
  for (int k = 1; k <= n - 1; ++k)
    pts.push_back(fixed_point_of_filling(bottom_row_filling(n, k), sigma));

  // Identity class restricts to 1 everywhere; the single reflection
  // s_(n-1) projects to -2t at every bottom row point.
  for (const auto& u : pts) {
    CHECK(springer_schubert(Permutation::identity(n), u, wts) ==
          UniPoly::constant(Rat(1)));
    CHECK(springer_schubert(s(n, n - 1), u, wts) ==
          UniPoly::monomial(Rat(-2), 1));
  }

  CHECK(springer_schubert(s(n, 5) * s(n, 4), pts.back(), wts) ==
        UniPoly::monomial(Rat(2), 2));
}

TEST_CASE("two letter classes split the bottom row points in two bands") {
  // At column k the first k points share one quadratic value and the rest
  // share another; the two bands differ.
  const int n = 7, k = 4;
  const Partition shape({n - 2, 2});
  const Permutation sigma = rotated_english_sigma(shape);
  const WeightAssignment wts = circle_weights(shape, sigma);
  const Permutation v = s(n, n - 1) * s(n, k);
  for (int kp = 1; kp <= n - 1; ++kp) {
    const Permutation u =
        fixed_point_of_filling(bottom_row_filling(n, kp), sigma);
    const UniPoly got = springer_schubert(v, u, wts);
    const int expect = kp <= k ? 2 * (n - k + 1) : 4 * (n - k);
    CHECK(got == UniPoly::monomial(Rat(expect), 2));
  }
}
