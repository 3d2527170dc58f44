#include "springer/nilmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace springer {

NilMatrix::NilMatrix(int n, std::vector<std::pair<int, int>> ones)
    : n_(n), ones_(std::move(ones)) {
  if (n_ < 0) throw std::invalid_argument("nilmatrix: negative size");
  std::sort(ones_.begin(), ones_.end());
  row_to_col_.assign(n_, 0);
  col_to_row_.assign(n_, 0);
  for (auto [i, j] : ones_) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::invalid_argument("nilmatrix: position out of range");
    if (row_to_col_[i - 1] || col_to_row_[j - 1])
      throw std::invalid_argument("nilmatrix: more than one 1 in a line");
    row_to_col_[i - 1] = j;
    col_to_row_[j - 1] = i;
  }
}

bool NilMatrix::at(int i, int j) const { return col_of_row(i) == j; }

NilMatrix jordan_matrix(const Partition& shape) {
  std::vector<std::pair<int, int>> ones;
  int base = 0;
  for (int r = 1; r <= shape.num_rows(); ++r) {
    for (int k = 1; k < shape.row(r); ++k)
      ones.emplace_back(base + k, base + k + 1);
    base += shape.row(r);
  }
  return NilMatrix(shape.n(), std::move(ones));
}

NilMatrix adjacent_pair_matrix(const Filling& T) {
  std::vector<std::pair<int, int>> ones;
  for (int v = 1; v <= T.n(); ++v)
    if (int right = T.right_neighbor(v)) ones.emplace_back(v, right);
  return NilMatrix(T.n(), std::move(ones));
}

std::vector<int> pivots(const NilMatrix& X) {
  // Every 1 is a pivot: its row and column hold no other nonzero entry.
  std::vector<int> r(X.n());
  for (int j = 1; j <= X.n(); ++j) r[j - 1] = X.row_of_col(j);
  return r;
}

std::vector<int> pivots_dense(const std::vector<std::vector<int>>& X) {
  const int n = (int)X.size();
  std::vector<int> r(n, 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (!X[i - 1][j - 1]) continue;
      bool pivot = true;
      for (int b = i + 1; b <= n && pivot; ++b)
        if (X[b - 1][j - 1]) pivot = false;
      for (int a = 1; a < j && pivot; ++a)
        if (X[i - 1][a - 1]) pivot = false;
      if (pivot) r[j - 1] = i;
    }
  }
  return r;
}

bool is_highest_form(const NilMatrix& X) {
  for (auto [i, j] : X.ones())
    if (i >= j) return false;
  const auto r = pivots(X);
  for (size_t j = 1; j < r.size(); ++j)
    if (r[j - 1] > r[j]) return false;
  return true;
}

std::vector<Filling> highest_form_fillings(const Partition& shape) {
  const int ell = shape.num_rows();
  const auto mu = shape.col_lengths();
  std::vector<Filling> out;
  for (const auto& first_col : symmetric_group(ell)) {
    std::vector<std::vector<int>> rows(ell);
    for (int r = 1; r <= ell; ++r) rows[r - 1].assign(shape.row(r), 0);
    // Rows in increasing order of their leftmost-column entry.
    std::vector<int> row_order(ell);
    for (int r = 1; r <= ell; ++r) row_order[first_col(r) - 1] = r;
    int next = 1;
    for (int c = 1; c <= shape.num_cols(); ++c) {
      // Participating rows are those with at least c boxes, i.e. the first
      // mu[c-1] rows; keep the leftmost column's order among them.
      for (int r : row_order)
        if (shape.row(r) >= c) rows[r - 1][c - 1] = next++;
    }
    out.emplace_back(shape, std::move(rows));
  }
  return out;
}

long long count_distinct_highest_forms(const Partition& shape) {
  long long count = 1;
  for (int i = 2; i <= shape.num_rows(); ++i) count *= i;
  for (int d : shape.distinct_multiplicities())
    for (int i = 2; i <= d; ++i) count /= i;
  return count;
}

NilMatrix conjugate(const NilMatrix& X, const Permutation& sigma) {
  if (sigma.n() != X.n())
    throw std::invalid_argument("conjugate: size mismatch");
  std::vector<std::pair<int, int>> ones;
  for (auto [i, j] : X.ones()) ones.emplace_back(sigma(i), sigma(j));
  return NilMatrix(X.n(), std::move(ones));
}

WeightAssignment circle_weights(const Partition& shape,
                                const Permutation& sigma) {
  const int n = shape.n();
  if (sigma.n() != n)
    throw std::invalid_argument("circle_weights: size mismatch");
  const Permutation inv = sigma.inverse();
  WeightAssignment w;
  w.n = n;
  w.weights.resize(n);
  for (int i = 1; i <= n; ++i) w.weights[i - 1] = n + 1 - inv(i);
  return w;
}

}  // namespace springer
