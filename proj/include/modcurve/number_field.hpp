#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "modcurve/rational.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

inline constexpr std::size_t kFieldDegree = 6;

// The totally real sextic field K = Q(a), a a root of
// x^6 - x^5 - 5x^4 + 4x^3 + 6x^2 - 3x - 1 (so K = Q(zeta_13)^+ and Z[a] is its ring of integers).
class NumberFieldDesc {
 public:
  static const NumberFieldDesc& instance();

  const UniPoly<Rational>& minimal_polynomial() const { return minpoly_; }
  // Monic integer coefficients m_0..m_6 of the minimal polynomial.
  const std::array<Integer, kFieldDegree + 1>& integer_minpoly() const { return int_minpoly_; }
  // The six real roots in increasing order, to double precision.
  const std::vector<double>& real_roots() const { return roots_; }

 private:
  NumberFieldDesc();

  UniPoly<Rational> minpoly_;
  std::array<Integer, kFieldDegree + 1> int_minpoly_;
  std::vector<double> roots_;
};

// Element of K in the power basis: (n_0 + n_1 a + ... + n_5 a^5) / den with integer n_i,
// den > 0 and gcd(n_0, ..., n_5, den) = 1. The representation is unique.
class NFElement {
 public:
  NFElement() : den_(1) {}
  NFElement(long n) : den_(1) { num_[0] = n; }  // NOLINT(google-explicit-constructor)
  NFElement(const Rational& r);                 // NOLINT(google-explicit-constructor)

  // Element (sum c_i a^i) / den from small integer coordinates.
  static NFElement from_coeffs(const std::array<long, kFieldDegree>& c, long den = 1);
  static NFElement from_rationals(const std::vector<Rational>& c);
  static NFElement from_integers(std::array<Integer, kFieldDegree> num, Integer den);
  static NFElement from_poly(const UniPoly<Rational>& p);
  static NFElement generator();

  Rational coeff(std::size_t i) const { return Rational(num_[i], den_); }
  const Integer& numerator(std::size_t i) const { return num_[i]; }
  const std::array<Integer, kFieldDegree>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  UniPoly<Rational> to_poly() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const { return den_ == 1; }
  NFElement zero() const { return NFElement(); }
  NFElement one() const { return NFElement(1); }
  NFElement from_int(long n) const { return NFElement(n); }

  NFElement inv() const;

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o) { return *this += -o; }
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o) { return *this *= o.inv(); }

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }
  friend bool operator==(const NFElement& a, const NFElement& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

  // Lexicographic comparison of power-basis coordinates, constant term first.
  std::strong_ordering lex_compare(const NFElement& o) const;

  // Value under the embedding a -> root (double precision; for diagnostics and ordering only).
  double approx(double root) const;

  // "(c5*a^5 + ... + c0)/den"
  std::string to_string() const;

 private:
  void normalize();

  std::array<Integer, kFieldDegree> num_{};
  Integer den_;
};

}  // namespace modcurve
