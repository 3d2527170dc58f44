#include "springer/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace springer {

namespace {

void trim(std::vector<Rat>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rat& c, int deg) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  return UniPoly(std::move(v));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& coeff = c_[k];
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    Rat mag = negative ? Rat(-coeff) : coeff;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? '-' : '+');
    }
    const bool unit = (mag == 1 && k > 0);
    if (!unit) {
      if (mag.get_den() == 1)
        out << mag.get_str();
      else
        out << '(' << mag.get_str() << ')';
    }
    if (k == 1)
      out << 't';
    else if (k > 1)
      out << "t^" << k;
  }
  return out.str();
}

UniPoly divide_exact(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (num.is_zero()) return UniPoly();
  if (num.degree() < den.degree())
    throw std::invalid_argument("divide_exact: nonzero remainder");
  std::vector<Rat> rem(num.coeffs());
  std::vector<Rat> quot(num.degree() - den.degree() + 1, Rat(0));
  const Rat lead = den.coeffs().back();
  for (int k = (int)quot.size() - 1; k >= 0; --k) {
    const Rat q = rem[k + den.degree()] / lead;
    quot[k] = q;
    if (q != 0)
      for (int j = 0; j <= den.degree(); ++j)
        rem[k + j] -= q * den.coeffs()[j];
  }
  for (const Rat& r : rem)
    if (r != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
  return UniPoly(std::move(quot));
}

LinForm LinForm::var(int n, int i) {
  LinForm f(n);
  f.set(i, Rat(1));
  return f;
}

LinForm LinForm::simple_root(int n, int i) {
  LinForm f(n);
  f.set(i, Rat(1));
  f.set(i + 1, Rat(-1));
  return f;
}

bool LinForm::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

LinForm LinForm::applied(const Permutation& w) const {
  LinForm out(n());
  for (int i = 1; i <= n(); ++i)
    if (c_[i - 1] != 0) out.set(w(i), out.at(w(i)) + c_[i - 1]);
  return out;
}

LinForm LinForm::operator+(const LinForm& o) const {
  LinForm out(n());
  for (int i = 1; i <= n(); ++i) out.set(i, at(i) + o.at(i));
  return out;
}

LinForm LinForm::operator-(const LinForm& o) const {
  LinForm out(n());
  for (int i = 1; i <= n(); ++i) out.set(i, at(i) - o.at(i));
  return out;
}

MultiPoly MultiPoly::constant(int n, const Rat& c) {
  MultiPoly p(n);
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

MultiPoly MultiPoly::from_lin(const LinForm& f) {
  MultiPoly p(f.n());
  for (int i = 1; i <= f.n(); ++i) {
    if (f.at(i) == 0) continue;
    std::vector<int> expo(f.n(), 0);
    expo[i - 1] = 1;
    p.add_term(expo, f.at(i));
  }
  return p;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [expo, coeff] : terms_) {
    int d = 0;
    for (int e : expo) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [expo, coeff] : terms_) {
    int d = 0;
    for (int e : expo) d += e;
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

void MultiPoly::add_term(const std::vector<int>& expo, const Rat& coeff) {
  assert((int)expo.size() == n_);
  if (coeff == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(n_ == o.n_);
  MultiPoly out(*this);
  for (const auto& [expo, coeff] : o.terms_) out.add_term(expo, coeff);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(n_ == o.n_);
  MultiPoly out(n_);
  std::vector<int> expo(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) expo[i] = ea[i] + eb[i];
      out.add_term(expo, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::times(const LinForm& f) const {
  assert(n_ == f.n());
  MultiPoly out(n_);
  std::vector<int> expo(n_);
  for (const auto& [ea, ca] : terms_)
    for (int i = 1; i <= n_; ++i) {
      if (f.at(i) == 0) continue;
      expo = ea;
      ++expo[i - 1];
      out.add_term(expo, ca * f.at(i));
    }
  return out;
}

Rat MultiPoly::eval(const std::vector<Rat>& values) const {
  assert((int)values.size() == n_);
  Rat acc(0);
  for (const auto& [expo, coeff] : terms_) {
    Rat term(coeff);
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < expo[i]; ++e) term *= values[i];
    acc += term;
  }
  return acc;
}

}  // namespace springer
