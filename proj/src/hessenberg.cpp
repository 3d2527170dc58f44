#include "springer/hessenberg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace springer {

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : values_(std::move(values)) {
  const int n = (int)values_.size();
  if (n == 0) throw std::invalid_argument("hessenberg: empty");
  for (int i = 1; i <= n; ++i) {
    if (values_[i - 1] < i || values_[i - 1] > n)
      throw std::invalid_argument("hessenberg: h(i) must lie in [i, n]");
    if (i > 1 && values_[i - 1] < values_[i - 2])
      throw std::invalid_argument("hessenberg: h must be nondecreasing");
  }
}

bool HessenbergFunction::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (values_[i - 1] != i) return false;
  return true;
}

HessenbergFunction identity_h(int n) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i;
  return HessenbergFunction(std::move(v));
}

bool in_hessenberg_space(const NilMatrix& X, const HessenbergFunction& h) {
  if (X.n() != h.n())
    throw std::invalid_argument("in_hessenberg_space: size mismatch");
  for (auto [i, j] : X.ones())
    if (i > h(j)) return false;
  return true;
}

bool in_hessenberg_space_dense(const std::vector<std::vector<int>>& X,
                               const HessenbergFunction& h) {
  if ((int)X.size() != h.n())
    throw std::invalid_argument("in_hessenberg_space: size mismatch");
  for (int i = 1; i <= h.n(); ++i)
    for (int j = 1; j <= h.n(); ++j)
      if (X[i - 1][j - 1] != 0 && i > h(j)) return false;
  return true;
}

bool is_permissible(const Filling& T, const HessenbergFunction& h) {
  if (T.n() != h.n())
    throw std::invalid_argument("is_permissible: size mismatch");
  for (int k = 1; k <= T.n(); ++k)
    if (int j = T.right_neighbor(k); j && k > h(j)) return false;
  return true;
}

namespace {

// Distribute 1..n over the rows (row r takes shape.row(r) values), each row
// sorted increasingly: exactly the row-strict fillings.
void row_strict_rec(const Partition& shape, int row, std::vector<int>& pool,
                    std::vector<std::vector<int>>& rows,
                    std::vector<Filling>& out) {
  if (row > shape.num_rows()) {
    out.emplace_back(shape, rows);
    return;
  }
  const int take = shape.row(row);
  std::vector<int> mask(pool.size(), 0);
  std::fill(mask.begin(), mask.begin() + take, 1);
  // Iterate subsets via mask permutations; prev_permutation walks all
  // distinct 0/1 masks.
  do {
    std::vector<int> rest;
    rows[row - 1].clear();
    for (size_t i = 0; i < pool.size(); ++i)
      (mask[i] ? rows[row - 1] : rest).push_back(pool[i]);
    std::swap(pool, rest);
    row_strict_rec(shape, row + 1, pool, rows, out);
    std::swap(pool, rest);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

std::vector<Filling> permissible_fillings(const Partition& shape,
                                          const HessenbergFunction& h) {
  if (shape.n() != h.n())
    throw std::invalid_argument("permissible_fillings: size mismatch");
  std::vector<Filling> out;
  if (h.is_identity()) {
    std::vector<int> pool(shape.n());
    for (int i = 0; i < shape.n(); ++i) pool[i] = i + 1;
    std::vector<std::vector<int>> rows(shape.num_rows());
    row_strict_rec(shape, 1, pool, rows, out);
  } else {
    for (const auto& T : all_fillings(shape))
      if (is_permissible(T, h)) out.push_back(T);
  }
  std::sort(out.begin(), out.end(),
            [](const Filling& a, const Filling& b) { return a < b; });
  return out;
}

std::vector<Permutation> fixed_points_bruteforce_serial(
    const NilMatrix& N, const HessenbergFunction& h) {
  std::vector<Permutation> out;
  for (const auto& w : symmetric_group(N.n()))
    if (in_hessenberg_space(conjugate(N, w.inverse()), h)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> fixed_points_bruteforce(const NilMatrix& N,
                                                 const HessenbergFunction& h) {
  const auto group = symmetric_group(N.n());
  std::vector<char> hit(group.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long idx = 0; idx < (long long)group.size(); ++idx) {
    const Permutation& w = group[idx];
    hit[idx] = in_hessenberg_space(conjugate(N, w.inverse()), h) ? 1 : 0;
  }
  std::vector<Permutation> out;
  for (size_t idx = 0; idx < group.size(); ++idx)
    if (hit[idx]) out.push_back(group[idx]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation fixed_point_of_filling(const Filling& T,
                                   const Permutation& sigma) {
  return sigma_read(T, sigma).inverse();
}

std::vector<Permutation> fixed_points(const Partition& shape,
                                      const HessenbergFunction& h,
                                      const Permutation& sigma) {
  std::vector<Permutation> out;
  for (const auto& T : permissible_fillings(shape, h))
    out.push_back(fixed_point_of_filling(T, sigma));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace springer
