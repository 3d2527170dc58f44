#pragma once
// Young diagrams: weakly decreasing positive row lengths, English
// orientation, boxes addressed (row, col) 1-based from the top left.

#include <string>
#include <vector>

namespace springer {

class Partition {
public:
  explicit Partition(std::vector<int> rows);
  // Parse a comma-separated row list, e.g. "4,2".
  static Partition parse(const std::string& text);

  int n() const { return n_; }                                  // total boxes
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_[0]; }
  int row(int i) const { return rows_[i - 1]; }                 // 1-based
  const std::vector<int>& rows() const { return rows_; }

  // Column lengths mu_j, j = 1..num_cols(); weakly decreasing.
  std::vector<int> col_lengths() const;
  // Multiplicities d_1..d_k of the distinct row lengths.
  std::vector<int> distinct_multiplicities() const;

  bool has_box(int r, int c) const;
  std::string str() const;  // "(4,2)"

  friend bool operator==(const Partition& a, const Partition& b) = default;

private:
  std::vector<int> rows_;
  int n_ = 0;
};

}  // namespace springer
