#pragma once
// Fillings of a Young diagram by 1..n (each value used exactly once), and
// the reading maps between fillings and permutations.

#include <string>
#include <vector>

#include "springer/partition.hpp"
#include "springer/permutation.hpp"

namespace springer {

class Filling {
public:
  struct Box {
    int row = 0, col = 0;  // 1-based
    friend bool operator==(const Box& a, const Box& b) = default;
  };

  Filling(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int entry(int r, int c) const { return rows_[r - 1][c - 1]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  Box box_of(int value) const { return where_[value - 1]; }
  // Entry directly to the right of value's box, or 0 if there is none.
  int right_neighbor(int value) const;

  // Rows joined as "[2 4 | 1 3]".
  std::string str() const;

  friend bool operator==(const Filling& a, const Filling& b) = default;
  bool operator<(const Filling& o) const { return rows_ < o.rows_; }

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> where_;  // index value-1 -> box
};

// Row-by-row reading, left to right starting at the top row.
Permutation english_read(const Filling& T);
// The filling whose english_read is the identity.
Filling english_fill(const Partition& shape);
// The filling that reads 1,2,..,n bottom-to-top along columns, leftmost
// column first.
Filling rotated_english_fill(const Partition& shape);
// english_read(rotated_english_fill(shape)): the production conjugator.
Permutation rotated_english_sigma(const Partition& shape);

// The filling T with english_read(T) = tau.
Filling filling_from_english(const Partition& shape, const Permutation& tau);

// Reading of T in the box order given by filling_from_english(shape, sigma):
// the box holding p in that auxiliary filling is read p-th. Equals
// english_read(T) * sigma^{-1}; sigma = identity gives english_read.
Permutation sigma_read(const Filling& T, const Permutation& sigma);
// Inverse of sigma_read in its first argument: the T with
// sigma_read(T, sigma) = tau, i.e. filling_from_english(shape, tau * sigma).
Filling filling_from_sigma(const Partition& shape, const Permutation& tau,
                           const Permutation& sigma);

// All n! fillings of the shape (test/oracle use), lexicographic by rows.
std::vector<Filling> all_fillings(const Partition& shape);

}  // namespace springer
