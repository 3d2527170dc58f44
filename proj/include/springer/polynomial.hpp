#pragma once
// Exact polynomial arithmetic over the rationals: univariate polynomials in
// t, linear forms in t_1..t_n, and sparse multivariate polynomials. No
// floating point anywhere.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "springer/permutation.hpp"

namespace springer {

using Rat = mpq_class;

// Coefficients ascending by power of t; canonical form has no trailing
// zeros, so the zero polynomial is the empty vector.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  Rat at(int k) const { return k < (int)c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& t) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  // "0", "1", "-2t", "12t^2", "t^2-2t+1", "(3/2)t"; no spaces.
  std::string str() const;

private:
  std::vector<Rat> c_;
};

// Quotient of exact division; throws if the division leaves a remainder.
UniPoly divide_exact(const UniPoly& num, const UniPoly& den);

// Sum of c_i t_i over i = 1..n.
class LinForm {
public:
  explicit LinForm(int n) : c_(n, Rat(0)) {}
  static LinForm var(int n, int i);
  // Simple root alpha_i = t_i - t_{i+1}.
  static LinForm simple_root(int n, int i);

  int n() const { return (int)c_.size(); }
  Rat at(int i) const { return c_[i - 1]; }
  void set(int i, const Rat& v) { c_[i - 1] = v; }
  bool is_zero() const;

  // w acts by t_i -> t_{w(i)}.
  LinForm applied(const Permutation& w) const;

  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  friend bool operator==(const LinForm& a, const LinForm& b) = default;

private:
  std::vector<Rat> c_;
};

// Sparse multivariate polynomial in t_1..t_n: exponent vector -> nonzero
// coefficient.
class MultiPoly {
public:
  explicit MultiPoly(int n) : n_(n) {}
  static MultiPoly constant(int n, const Rat& c);
  static MultiPoly from_lin(const LinForm& f);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  int total_degree() const;  // -1 for zero
  // True when every monomial has the same total degree (or zero).
  bool is_homogeneous() const;

  void add_term(const std::vector<int>& expo, const Rat& coeff);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly times(const LinForm& f) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  Rat eval(const std::vector<Rat>& values) const;

private:
  int n_;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace springer
