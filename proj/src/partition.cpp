#include "springer/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace springer {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("partition must have at least one row");
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing");
  }
  n_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry: '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad partition entry: '" + part + "'");
    rows.push_back(v);
  }
  return Partition(rows);
}

std::vector<int> Partition::col_lengths() const {
  std::vector<int> mu(num_cols(), 0);
  for (int len : rows_)
    for (int j = 0; j < len; ++j) ++mu[j];
  return mu;
}

std::vector<int> Partition::distinct_multiplicities() const {
  std::vector<int> d;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i == 0 || rows_[i] != rows_[i - 1])
      d.push_back(1);
    else
      ++d.back();
  }
  return d;
}

bool Partition::has_box(int r, int c) const {
  return r >= 1 && r <= num_rows() && c >= 1 && c <= rows_[r - 1];
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

}  // namespace springer
