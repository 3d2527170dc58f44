#pragma once
// Nilpotent 0/1 matrices attached to fillings: adjacency matrices, Jordan
// forms, pivots, highest-form testing and enumeration, and the circle
// weights induced by conjugation.

#include <tuple>
#include <utility>
#include <vector>

#include "springer/filling.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"

namespace springer {

// 0/1 matrix with at most one 1 per row and per column. Not necessarily
// upper triangular; nilpotence is equivalent to the support having no cycle,
// which the one-per-row/column rule plus use sites guarantee.
class NilMatrix {
public:
  NilMatrix(int n, std::vector<std::pair<int, int>> ones);

  int n() const { return n_; }
  // Sorted (row, col) positions holding 1, 1-based.
  const std::vector<std::pair<int, int>>& ones() const { return ones_; }
  bool at(int i, int j) const;
  // Column of the 1 in row i, or 0 if row i is zero.
  int col_of_row(int i) const { return row_to_col_[i - 1]; }
  // Row of the 1 in column j, or 0 if column j is zero.
  int row_of_col(int j) const { return col_to_row_[j - 1]; }

  friend bool operator==(const NilMatrix& a, const NilMatrix& b) = default;
  bool operator<(const NilMatrix& o) const {
    return std::tie(n_, ones_) < std::tie(o.n_, o.ones_);
  }

private:
  int n_;
  std::vector<std::pair<int, int>> ones_;
  std::vector<int> row_to_col_, col_to_row_;
};

// Block-diagonal nilpotent Jordan matrix, block sizes = rows of the shape.
NilMatrix jordan_matrix(const Partition& shape);

// 1 at (i, j) exactly when the box holding i sits directly left of the box
// holding j in T. Equals conjugate(jordan_matrix, english_read(T)).
NilMatrix adjacent_pair_matrix(const Filling& T);

// r_j = row of the pivot in column j, or 0 when column j has no pivot. A
// pivot is a nonzero entry whose column is zero below it and whose row is
// zero to its left; in a NilMatrix every 1 qualifies.
std::vector<int> pivots(const NilMatrix& X);
// Same on a dense integer matrix (test parity with hand examples).
std::vector<int> pivots_dense(const std::vector<std::vector<int>>& X);

// Strictly upper triangular with nondecreasing pivot sequence.
bool is_highest_form(const NilMatrix& X);

// The num_rows! fillings produced by the column-by-column algorithm: fix an
// order of the leftmost column, then each later column takes the next block
// of integers in the row order the leftmost column dictates (restricted to
// the rows long enough to participate). Exactly these fillings have
// adjacency matrices in highest form.
std::vector<Filling> highest_form_fillings(const Partition& shape);

// num_rows! / prod(multiplicity of each distinct row length)!, the number
// of distinct adjacency matrices over highest_form_fillings(shape).
long long count_distinct_highest_forms(const Partition& shape);

// sigma X sigma^{-1} under the convention that the permutation matrix of
// sigma has i-th column e_{sigma(i)}; on support, (i,j) -> (sigma(i),
// sigma(j)).
NilMatrix conjugate(const NilMatrix& X, const Permutation& sigma);

// Integer weight c_i per coordinate, meaning the circle acts on coordinate
// i with weight c_i (t_i specializes to c_i * t).
struct WeightAssignment {
  int n = 0;
  std::vector<int> weights;  // index i-1 -> c_i, a permutation of 1..n

  int weight(int i) const { return weights[i - 1]; }
  friend bool operator==(const WeightAssignment& a,
                         const WeightAssignment& b) = default;
};

// Weights after conjugating diag(t^n, .., t) by sigma: c_i = n + 1 -
// sigma^{-1}(i).
WeightAssignment circle_weights(const Partition& shape,
                                const Permutation& sigma);

}  // namespace springer
