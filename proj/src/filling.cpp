#include "springer/filling.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace springer {

Filling::Filling(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if ((int)rows_.size() != shape_.num_rows())
    throw std::invalid_argument("filling: wrong number of rows");
  const int n = shape_.n();
  where_.assign(n, Box{});
  std::vector<bool> seen(n, false);
  for (int r = 1; r <= shape_.num_rows(); ++r) {
    if ((int)rows_[r - 1].size() != shape_.row(r))
      throw std::invalid_argument("filling: row length mismatch");
    for (int c = 1; c <= shape_.row(r); ++c) {
      int v = rows_[r - 1][c - 1];
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("filling: entries must be 1..n, each once");
      seen[v - 1] = true;
      where_[v - 1] = Box{r, c};
    }
  }
}

int Filling::right_neighbor(int value) const {
  Box b = box_of(value);
  if (b.col < shape_.row(b.row)) return entry(b.row, b.col + 1);
  return 0;
}

std::string Filling::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << " | ";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ' ';
      out << rows_[r][c];
    }
  }
  out << ']';
  return out.str();
}

Permutation english_read(const Filling& T) {
  std::vector<int> word;
  word.reserve(T.n());
  for (const auto& row : T.rows())
    for (int v : row) word.push_back(v);
  return Permutation(word);
}

Filling english_fill(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.num_rows());
  int next = 1;
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) rows[r - 1].push_back(next++);
  return Filling(shape, std::move(rows));
}

Filling rotated_english_fill(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.num_rows());
  for (int r = 1; r <= shape.num_rows(); ++r)
    rows[r - 1].assign(shape.row(r), 0);
  const auto mu = shape.col_lengths();
  int next = 1;
  for (int c = 1; c <= shape.num_cols(); ++c)
    for (int r = mu[c - 1]; r >= 1; --r) rows[r - 1][c - 1] = next++;
  return Filling(shape, std::move(rows));
}

Permutation rotated_english_sigma(const Partition& shape) {
  return english_read(rotated_english_fill(shape));
}

Filling filling_from_english(const Partition& shape, const Permutation& tau) {
  if (tau.n() != shape.n())
    throw std::invalid_argument("filling_from_english: size mismatch");
  std::vector<std::vector<int>> rows(shape.num_rows());
  int pos = 1;
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) rows[r - 1].push_back(tau(pos++));
  return Filling(shape, std::move(rows));
}

Permutation sigma_read(const Filling& T, const Permutation& sigma) {
  // The box holding p in filling_from_english(shape, sigma) sits at english
  // position sigma^{-1}(p), so the p-th letter read is T's entry there:
  // sigma_read(T, sigma) = english_read(T) * sigma^{-1}.
  const Permutation tau = english_read(T);
  if (sigma.n() != tau.n())
    throw std::invalid_argument("sigma_read: size mismatch");
  const Permutation sigma_inv = sigma.inverse();
  std::vector<int> word(tau.n());
  for (int p = 1; p <= tau.n(); ++p) word[p - 1] = tau(sigma_inv(p));
  return Permutation(word);
}

Filling filling_from_sigma(const Partition& shape, const Permutation& tau,
                           const Permutation& sigma) {
  return filling_from_english(shape, tau * sigma);
}

std::vector<Filling> all_fillings(const Partition& shape) {
  std::vector<Filling> out;
  for (const auto& w : symmetric_group(shape.n()))
    out.push_back(filling_from_english(shape, w));
  return out;
}

}  // namespace springer
