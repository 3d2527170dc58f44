#pragma once
// Permutations of {1,..,n} in one-line notation.
//
// Composition convention, fixed repo-wide: (u*v)(i) = u(v(i)), so in a
// product the rightmost factor acts first. All indices are 1-based.

#include <string>
#include <vector>

namespace springer {

class Permutation {
public:
  Permutation() = default;  // n = 0
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  // Simple transposition s_i swapping i and i+1, for 1 <= i <= n-1.
  static Permutation transposition(int n, int i);
  // Product s_{letters[0]} * s_{letters[1]} * ... in S_n.
  static Permutation from_letters(int n, const std::vector<int>& letters);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& oneline() const { return word_; }

  Permutation inverse() const;
  int length() const;  // inversion count
  bool is_identity() const;

  // One-line notation as a string: "2413" when n <= 9, comma-separated
  // ("2,4,1,3") otherwise.
  std::string str() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
  std::vector<int> word_;
};

// Bruhat order, computed by the rank-matrix dominance criterion:
// v <= w iff #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Reference implementation of Bruhat order by the subword characterization:
// v <= w iff some subword of a fixed reduced word of w is a reduced word
// of v. Exponential; test oracle only.
bool bruhat_leq_subword_oracle(const Permutation& v, const Permutation& w);

// A deterministic reduced word for w: repeatedly take the largest value not
// yet in its place and walk it right with adjacent swaps. The product of
// s_i over the result equals w and its length equals w.length().
std::vector<int> reduced_word(const Permutation& w);

// All permutations of S_n in lexicographic order.
std::vector<Permutation> symmetric_group(int n);

}  // namespace springer
