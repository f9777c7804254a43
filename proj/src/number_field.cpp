#include "modcurve/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace modcurve {

NumberFieldDesc::NumberFieldDesc() {
  const long m[kFieldDegree + 1] = {-1, -3, 6, 4, -5, -1, 1};
  for (std::size_t i = 0; i <= kFieldDegree; ++i) int_minpoly_[i] = m[i];
  minpoly_ = rational_poly({-1, -3, 6, 4, -5, -1, 1});

  // Real roots by bisection on a sign-change grid; refined to double precision.
  auto eval = [&](double t) {
    double acc = 0;
    for (std::size_t i = kFieldDegree + 1; i-- > 0;) acc = acc * t + static_cast<double>(m[i]);
    return acc;
  };
  const int steps = 4000;
  const double lo = -4.0, hi = 4.0;
  for (int i = 0; i < steps; ++i) {
    double a = lo + (hi - lo) * i / steps;
    double b = lo + (hi - lo) * (i + 1) / steps;
    double fa = eval(a), fb = eval(b);
    if (fa == 0.0) {
      roots_.push_back(a);
      continue;
    }
    if ((fa < 0) != (fb < 0)) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots_.push_back(0.5 * (a + b));
    }
  }
  std::sort(roots_.begin(), roots_.end());
  if (roots_.size() != kFieldDegree) throw Error("minimal polynomial of K is expected to be totally real");
}

const NumberFieldDesc& NumberFieldDesc::instance() {
  static const NumberFieldDesc desc;
  return desc;
}

NFElement::NFElement(const Rational& r) : den_(r.den()) { num_[0] = r.num(); }

NFElement NFElement::from_coeffs(const std::array<long, kFieldDegree>& c, long den) {
  if (den == 0) throw DivisionByZero();
  NFElement e;
  for (std::size_t i = 0; i < kFieldDegree; ++i) e.num_[i] = c[i];
  e.den_ = den;
  e.normalize();
  return e;
}

NFElement NFElement::from_rationals(const std::vector<Rational>& c) {
  if (c.size() > kFieldDegree) return from_poly(UniPoly<Rational>(c, Rational()));
  Integer den = 1;
  for (const auto& r : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.den().get_mpz_t());
  NFElement e;
  for (std::size_t i = 0; i < c.size(); ++i) e.num_[i] = c[i].num() * (den / c[i].den());
  e.den_ = den;
  e.normalize();
  return e;
}

NFElement NFElement::from_integers(std::array<Integer, kFieldDegree> num, Integer den) {
  if (den == 0) throw DivisionByZero();
  NFElement e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.normalize();
  return e;
}

NFElement NFElement::from_poly(const UniPoly<Rational>& p) {
  const auto r = p % NumberFieldDesc::instance().minimal_polynomial();
  std::vector<Rational> c(r.coeffs().begin(), r.coeffs().end());
  return from_rationals(c);
}

NFElement NFElement::generator() { return from_coeffs({0, 1, 0, 0, 0, 0}); }

UniPoly<Rational> NFElement::to_poly() const {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < kFieldDegree; ++i) c.push_back(coeff(i));
  return UniPoly<Rational>(std::move(c), Rational());
}

bool NFElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& n) { return n == 0; });
}

bool NFElement::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& n) { return n == 0; });
}

void NFElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = den_;
  for (const auto& n : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g != 1) {
    for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < kFieldDegree; ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < kFieldDegree; ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  std::array<Integer, 2 * kFieldDegree - 1> prod{};
  for (std::size_t i = 0; i < kFieldDegree; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < kFieldDegree; ++j) {
      if (o.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  // a^6 = -(m_0 + m_1 a + ... + m_5 a^5)
  const auto& m = NumberFieldDesc::instance().integer_minpoly();
  for (std::size_t k = 2 * kFieldDegree - 2; k >= kFieldDegree; --k) {
    if (prod[k] == 0) continue;
    for (std::size_t j = 0; j < kFieldDegree; ++j) {
      if (m[j] == 0) continue;
      mpz_submul(prod[k - kFieldDegree + j].get_mpz_t(), prod[k].get_mpz_t(), m[j].get_mpz_t());
    }
    prod[k] = 0;
  }
  for (std::size_t i = 0; i < kFieldDegree; ++i) num_[i] = std::move(prod[i]);
  den_ *= o.den_;
  normalize();
  return *this;
}

NFElement NFElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return NFElement(Rational(den_, num_[0]));
  auto [g, s, t] = xgcd(to_poly(), NumberFieldDesc::instance().minimal_polynomial());
  (void)t;
  if (g.degree() != 0) throw Error("minimal polynomial is reducible");
  return from_poly(s);
}

std::strong_ordering NFElement::lex_compare(const NFElement& o) const {
  for (std::size_t i = 0; i < kFieldDegree; ++i) {
    // num_i / den vs o.num_i / o.den
    const int c = cmp(num_[i] * o.den_, o.num_[i] * den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

double NFElement::approx(double root) const {
  double acc = 0;
  for (std::size_t i = kFieldDegree; i-- > 0;) acc = acc * root + num_[i].get_d();
  return acc / den_.get_d();
}

std::string NFElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = kFieldDegree; i-- > 0;) {
    if (num_[i] == 0) continue;
    const bool neg = num_[i] < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(num_[i]);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0 && mag != 1) os << "*";
    if (i >= 1) os << "a";
    if (i >= 2) os << "^" << i;
  }
  if (first) return "0";
  if (den_ == 1) return os.str();
  return "(" + os.str() + ")/" + den_.get_str();
}

}  // namespace modcurve
