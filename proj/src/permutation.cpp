#include "springer/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace springer {

Permutation::Permutation(std::vector<int> oneline) : word_(std::move(oneline)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.word_[i - 1], w.word_[i]);
  return w;
}

Permutation Permutation::from_letters(int n, const std::vector<int>& letters) {
  Permutation w = identity(n);
  for (int i : letters) w = w * transposition(n, i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= n(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (word_[i] > word_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i > 0) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> w(u.n());
  for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const int n = v.n();
  // rank(u, i, j) = #{a <= i : u(a) >= j}, accumulated column-by-column.
  for (int i = 1; i <= n; ++i) {
    int rv = 0, rw = 0;
    // walk j downward so both counts grow incrementally
    std::vector<int> cv(n + 2, 0), cw(n + 2, 0);
    for (int a = 1; a <= i; ++a) {
      ++cv[v(a)];
      ++cw[w(a)];
    }
    for (int j = n; j >= 1; --j) {
      rv += cv[j];
      rw += cw[j];
      if (rv > rw) return false;
    }
  }
  return true;
}

bool bruhat_leq_subword_oracle(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const std::vector<int> word = reduced_word(w);
  const int m = static_cast<int>(word.size());
  const int target = v.length();
  if (target > m) return false;
  // depth-first over subwords, keeping only length-increasing (reduced) picks
  std::vector<std::pair<Permutation, int>> stack;  // (partial product, next position)
  stack.push_back({Permutation::identity(v.n()), 0});
  while (!stack.empty()) {
    auto [p, pos] = stack.back();
    stack.pop_back();
    const int len = p.length();
    if (len == target) {
      if (p == v) return true;
      continue;
    }
    if (target - len > m - pos) continue;
    // skip position
    stack.push_back({p, pos + 1});
    // take position if it lengthens the product
    const int i = word[pos];
    if (p(i) < p(i + 1)) stack.push_back({p * Permutation::transposition(v.n(), i), pos + 1});
  }
  return false;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Sort w to the identity by right multiplications: moving the value v
  // from position j to position v appends letters j, j+1, .., v-1, each
  // killing one inversion. w * (applied letters) = id, so w is the product
  // of the applied letters reversed.
  std::vector<int> cur = w.oneline();
  const int n = w.n();
  std::vector<int> applied;
  for (int v = n; v >= 2; --v) {
    int j = 1;
    while (cur[j - 1] != v) ++j;
    for (int p = j; p < v; ++p) {
      std::swap(cur[p - 1], cur[p]);
      applied.push_back(p);
    }
  }
  std::reverse(applied.begin(), applied.end());
  assert(static_cast<int>(applied.size()) == w.length());
  return applied;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

}  // namespace springer
