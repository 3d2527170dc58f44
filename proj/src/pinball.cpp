#include "springer/pinball.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace springer {

namespace {

bool is_row_strict(const Filling& T) {
  for (const auto& row : T.rows())
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return false;
  return true;
}

}  // namespace

std::vector<DimPair> dimension_pairs(const Filling& T) {
  if (!is_row_strict(T))
    throw std::invalid_argument("dimension_pairs: filling is not row-strict");
  std::vector<DimPair> out;
  for (int a = 1; a <= T.n(); ++a) {
    const auto box_a = T.box_of(a);
    const int cap = T.right_neighbor(a);  // 0 means no right neighbor
    for (int b = a + 1; b <= T.n(); ++b) {
      if (cap && b > cap) continue;
      const auto box_b = T.box_of(b);
      const bool below_same_col =
          box_b.col == box_a.col && box_b.row > box_a.row;
      if (below_same_col || box_b.col < box_a.col) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> top_parts(const std::vector<DimPair>& pairs, int n) {
  std::vector<int> x(n >= 2 ? n - 1 : 0, 0);
  for (const auto& p : pairs) {
    assert(p.b >= 2 && p.b <= n);
    ++x[p.b - 2];
  }
  for (int l = 2; l <= n; ++l) assert(x[l - 2] <= l - 1);
  return x;
}

Permutation omega(const std::vector<int>& x) {
  const int n = (int)x.size() + 1;
  Permutation w = Permutation::identity(n);
  int total = 0;
  for (int l = 2; l <= n; ++l) {
    const int xl = x[l - 2];
    if (xl < 0 || xl > l - 1)
      throw std::invalid_argument("omega: top-part count out of range");
    for (int i = l - 1; i > l - 1 - xl; --i)
      w = w * Permutation::transposition(n, i);
    total += xl;
  }
  assert(w.length() == total);
  return w;
}

Permutation rolldown(const Permutation& w, const Partition& shape,
                     const Permutation& sigma) {
  const Filling T = filling_from_sigma(shape, w.inverse(), sigma);
  if (!is_row_strict(T))
    throw std::invalid_argument("rolldown: w is not a fixed point");
  return omega(top_parts(dimension_pairs(T), shape.n())).inverse();
}

std::vector<long long> betti_numbers(const Partition& shape) {
  std::vector<long long> b;
  for (const auto& T : permissible_fillings(shape, identity_h(shape.n()))) {
    const int k = (int)dimension_pairs(T).size();
    if ((int)b.size() <= k) b.resize(k + 1, 0);
    ++b[k];
  }
  return b;
}

Filling bottom_row_filling(int n, int k) {
  if (n < 4 || k < 1 || k > n - 1)
    throw std::invalid_argument("bottom_row_filling: need n >= 4, 1 <= k < n");
  std::vector<int> top;
  for (int v = 1; v <= n - 1; ++v)
    if (v != k) top.push_back(v);
  return Filling(Partition({n - 2, 2}), {top, {k, n}});
}

namespace {

bool is_two_row_two_shape(const Partition& shape) {
  return shape.num_rows() == 2 && shape.row(2) == 2;
}

std::vector<Filling> two_row_order(int m) {
  if (m == 2) {
    const Partition base({2, 2});
    return {
        Filling(base, {{2, 4}, {1, 3}}), Filling(base, {{1, 4}, {2, 3}}),
        Filling(base, {{3, 4}, {1, 2}}), Filling(base, {{2, 3}, {1, 4}}),
        Filling(base, {{1, 3}, {2, 4}}), Filling(base, {{1, 2}, {3, 4}}),
    };
  }
  const int n = m + 2;
  const Partition shape({m, 2});
  std::vector<Filling> out;
  for (const auto& prev : two_row_order(m - 1)) {
    auto rows = prev.rows();
    rows[0].push_back(n);
    out.emplace_back(shape, std::move(rows));
  }
  for (int k = 1; k <= n - 1; ++k) out.push_back(bottom_row_filling(n, k));
  return out;
}

}  // namespace

std::vector<Filling> canonical_filling_order(const Partition& shape,
                                             const Permutation& sigma) {
  if (is_two_row_two_shape(shape)) return two_row_order(shape.row(1));
  auto fillings = permissible_fillings(shape, identity_h(shape.n()));
  std::sort(fillings.begin(), fillings.end(),
            [&](const Filling& a, const Filling& b) {
              return fixed_point_of_filling(a, sigma) <
                     fixed_point_of_filling(b, sigma);
            });
  return fillings;
}

std::vector<PinballRow> pinball_table(const Partition& shape,
                                      const Permutation& sigma) {
  std::vector<PinballRow> rows;
  for (const auto& T : canonical_filling_order(shape, sigma)) {
    auto pairs = dimension_pairs(T);
    const int deg = (int)pairs.size();
    const Permutation om = omega(top_parts(pairs, shape.n()));
    rows.push_back(PinballRow{fixed_point_of_filling(T, sigma), T,
                              std::move(pairs), deg, om, om.inverse()});
  }
  return rows;
}

}  // namespace springer
