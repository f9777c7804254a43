#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/rational.hpp"

namespace modcurve {

// Dense univariate polynomial over an exact field. Coefficients are stored constant term
// first; the zero polynomial has no coefficients. Field elements must provide zero(), one(),
// from_int(), is_zero(), inv() and the arithmetic operators; the stored zero_ carries the
// field context for element types whose field is chosen at run time.
template <class E>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const E& like) : zero_(like.zero()) {}
  UniPoly(std::vector<E> coeffs, const E& like) : c_(std::move(coeffs)), zero_(like.zero()) { trim(); }
  explicit UniPoly(std::vector<E> coeffs) : c_(std::move(coeffs)) {
    if (!c_.empty()) zero_ = c_.front().zero();
    trim();
  }

  static UniPoly constant(const E& c) { return UniPoly(std::vector<E>{c}, c); }
  static UniPoly monomial(const E& c, std::size_t k) {
    std::vector<E> v(k + 1, c.zero());
    v[k] = c;
    return UniPoly(std::move(v), c);
  }
  // The polynomial x over the field of `like`.
  static UniPoly x(const E& like) { return monomial(like.one(), 1); }
  // x - r
  static UniPoly linear_root(const E& r) { return UniPoly(std::vector<E>{-r, r.one()}, r); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<E>& coeffs() const { return c_; }
  const E& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const E& lc() const { return c_.empty() ? zero_ : c_.back(); }
  E zero_element() const { return zero_; }
  E one_element() const { return zero_.one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == zero_.one(); }

  void set_coeff(std::size_t i, const E& v) {
    if (i >= c_.size()) c_.resize(i + 1, zero_);
    c_[i] = v;
    trim();
  }

  E eval(const E& x) const {
    E acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Horner evaluation at a point of another ring; `embed` maps coefficients into it.
  template <class T, class Embed>
  T eval_with(const T& x, Embed embed) const {
    T acc = x.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(zero_);
    std::vector<E> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.from_int(static_cast<long>(i)));
    return UniPoly(std::move(d), zero_);
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    const E inv = c_.back().inv();
    return *this * inv;
  }

  template <class F>
  auto map(F f) const {
    using T = decltype(f(zero_));
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return UniPoly<T>(std::move(out), f(zero_));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const E& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const E& s) { return a *= s; }
  friend UniPoly operator*(const E& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly(a.zero_);
    std::vector<E> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out), a.zero_);
  }

  // Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (degree() < d.degree()) return {UniPoly(zero_), *this};
    std::vector<E> rem = c_;
    std::vector<E> quo(c_.size() - d.c_.size() + 1, zero_);
    const E inv_lc = d.lc().inv();
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      const E q = rem[k + dd] * inv_lc;
      quo[k] = q;
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
    }
    rem.resize(dd, zero_);
    return {UniPoly(std::move(quo), zero_), UniPoly(std::move(rem), zero_)};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }

  // Exact division; throws Inconsistent if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Inconsistent("polynomial division is not exact");
    return q;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i].to_string() << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<E> c_;
  E zero_{};
};

template <class E>
UniPoly<E> pow(const UniPoly<E>& base, unsigned long e) {
  UniPoly<E> result = UniPoly<E>::constant(base.one_element());
  UniPoly<E> b = base;
  while (e > 0) {
    if (e & 1UL) result = result * b;
    e >>= 1UL;
    if (e > 0) b = b * b;
  }
  return result;
}

// base^e mod m for an arbitrary-precision exponent.
template <class E>
UniPoly<E> powmod(const UniPoly<E>& base, const Integer& e, const UniPoly<E>& m) {
  UniPoly<E> result = UniPoly<E>::constant(base.one_element()) % m;
  UniPoly<E> b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

// Monic gcd (zero if both inputs are zero).
template <class E>
UniPoly<E> gcd(UniPoly<E> a, UniPoly<E> b) {
  while (!b.is_zero()) {
    UniPoly<E> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with g = s*a + t*b and g monic.
template <class E>
std::tuple<UniPoly<E>, UniPoly<E>, UniPoly<E>> xgcd(const UniPoly<E>& a, const UniPoly<E>& b) {
  const E z = a.is_zero() ? b.zero_element() : a.zero_element();
  UniPoly<E> r0 = a, r1 = b;
  UniPoly<E> s0 = UniPoly<E>::constant(z.one()), s1(z);
  UniPoly<E> t0(z), t1 = UniPoly<E>::constant(z.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<E> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<E> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const E inv = r0.lc().inv();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// Res(a, b) by the Euclidean algorithm over the field.
template <class E>
E resultant(UniPoly<E> a, UniPoly<E> b) {
  const E z = a.zero_element();
  if (a.is_zero() || b.is_zero()) return z;
  E acc = z.one();
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      E p = z.one();
      for (int i = 0; i < da; ++i) p *= b.lc();
      return acc * p;
    }
    UniPoly<E> r = a % b;
    if (r.is_zero()) return z;
    const int dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <class E>
E discriminant(const UniPoly<E>& f) {
  const int n = f.degree();
  if (n < 2) throw DegreeError("discriminant needs degree >= 2");
  E r = resultant(f, f.derivative()) / f.lc();
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

// Rational-coefficient polynomial from a list of integers, constant term first.
inline UniPoly<Rational> rational_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly<Rational>(std::move(v), Rational());
}

}  // namespace modcurve
