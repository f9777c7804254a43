#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/rational.hpp"
#include "modcurve/sqrt.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
template <class E>
struct WeierstrassCurve {
  E a1, a2, a3, a4, a6;

  WeierstrassCurve(E a1_, E a2_, E a3_, E a4_, E a6_)
      : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
    if (discriminant().is_zero()) throw Error("singular Weierstrass curve");
  }
  // y^2 = x^3 + a2 x^2 + a4 x + a6
  static WeierstrassCurve short_form(const E& a2, const E& a4, const E& a6) {
    return WeierstrassCurve(a2.zero(), a2, a2.zero(), a4, a6);
  }

  E b2() const { return a1 * a1 + a2 * a2.from_int(4); }
  E b4() const { return a1 * a3 + a4 * a4.from_int(2); }
  E b6() const { return a3 * a3 + a6 * a6.from_int(4); }
  E b8() const { return a1 * a1 * a6 + a2 * a6 * a6.from_int(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  E c4() const { return b2() * b2() - b4() * b4().from_int(24); }
  E discriminant() const {
    const E B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    const E& o = a1;
    return -(B2 * B2 * B8) - o.from_int(8) * B4 * B4 * B4 - o.from_int(27) * B6 * B6 + o.from_int(9) * B2 * B4 * B6;
  }
  E j_invariant() const {
    const E c = c4();
    return c * c * c / discriminant();
  }
  bool is_short() const { return a1.is_zero() && a3.is_zero(); }

  friend bool operator==(const WeierstrassCurve& u, const WeierstrassCurve& v) {
    return u.a1 == v.a1 && u.a2 == v.a2 && u.a3 == v.a3 && u.a4 == v.a4 && u.a6 == v.a6;
  }
};

template <class E>
struct ECPoint {
  bool infinity = true;
  E x{}, y{};

  static ECPoint at_infinity() { return ECPoint(); }
  static ECPoint affine(E x, E y) {
    ECPoint p;
    p.infinity = false;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
  }

  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
  std::string to_string() const { return infinity ? "O" : "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

template <class E>
bool on_curve(const WeierstrassCurve<E>& c, const ECPoint<E>& p) {
  if (p.infinity) return true;
  const E& x = p.x;
  const E& y = p.y;
  return y * y + c.a1 * x * y + c.a3 * y == x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
}

template <class E>
void require_on_curve(const WeierstrassCurve<E>& c, const ECPoint<E>& p) {
  if (!on_curve(c, p)) throw PointNotOnCurve("point " + p.to_string() + " is not on the curve");
}

template <class E>
ECPoint<E> ec_negate(const WeierstrassCurve<E>& c, const ECPoint<E>& p) {
  if (p.infinity) return p;
  return ECPoint<E>::affine(p.x, -p.y - c.a1 * p.x - c.a3);
}

template <class E>
ECPoint<E> ec_add_unchecked(const WeierstrassCurve<E>& c, const ECPoint<E>& p, const ECPoint<E>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  E lambda, nu;
  if (p.x == q.x) {
    const E yq_neg = -q.y - c.a1 * q.x - c.a3;
    if (p.y == yq_neg) return ECPoint<E>::at_infinity();
    const E& x = p.x;
    const E num = x * x * x.from_int(3) + c.a2 * x * x.from_int(2) + c.a4 - c.a1 * p.y;
    const E den = p.y * p.y.from_int(2) + c.a1 * x + c.a3;
    lambda = num / den;
    nu = (-(x * x * x) + c.a4 * x + c.a6 * x.from_int(2) - c.a3 * p.y) / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  const E x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
  const E y3 = -(lambda + c.a1) * x3 - nu - c.a3;
  return ECPoint<E>::affine(x3, y3);
}

template <class E>
ECPoint<E> ec_add(const WeierstrassCurve<E>& c, const ECPoint<E>& p, const ECPoint<E>& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return ec_add_unchecked(c, p, q);
}

template <class E>
ECPoint<E> ec_scalar_mul(const WeierstrassCurve<E>& c, const Integer& n, const ECPoint<E>& p) {
  require_on_curve(c, p);
  ECPoint<E> base = n < 0 ? ec_negate(c, p) : p;
  Integer k = abs(n);
  ECPoint<E> acc = ECPoint<E>::at_infinity();
  const std::size_t bits = k == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = ec_add_unchecked(c, acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = ec_add_unchecked(c, acc, base);
  }
  return acc;
}

// Least n <= bound with nP = O, or nullopt.
template <class E>
std::optional<long> point_order(const WeierstrassCurve<E>& c, const ECPoint<E>& p, long bound) {
  require_on_curve(c, p);
  ECPoint<E> acc = p;
  for (long n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = ec_add_unchecked(c, acc, p);
  }
  return std::nullopt;
}

namespace detail {

// Division polynomials of y^2 = x^3 + a2 x^2 + a4 x + a6 as polynomials in x: psi_n for odd n
// and psi_n / (2y) for even n. Works for values in any ring T that embeds the base field.
template <class T, class E>
class DivisionTable {
 public:
  DivisionTable(const WeierstrassCurve<E>& c, T x, T one) : one_(one) {
    if (!c.is_short()) throw UnsupportedForm("division polynomials need a1 = a3 = 0");
    auto k = [&](const E& e) { return one * e; };
    const E b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
    const E& z = c.a2;
    const T x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    const T F = x3 * k(z.from_int(4)) + x2 * k(b2) + x * k(b4 * z.from_int(2)) + k(b6);
    f2_ = F * F;
    memo_[1] = one;
    memo_[2] = one;
    memo_[3] = x4 * k(z.from_int(3)) + x3 * k(b2) + x2 * k(b4 * z.from_int(3)) + x * k(b6 * z.from_int(3)) + k(b8);
    memo_[4] = x6 * k(z.from_int(2)) + x5 * k(b2) + x4 * k(b4 * z.from_int(5)) + x3 * k(b6 * z.from_int(10)) +
               x2 * k(b8 * z.from_int(10)) + x * k(b2 * b8 - b4 * b6) + k(b4 * b8 - b6 * b6);
  }

  const T& get(long n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    T value;
    if (n % 2 == 1) {
      const long m = (n - 1) / 2;
      T p2 = get(m + 2), p0 = get(m), pm = get(m - 1), p1 = get(m + 1);
      if (m % 2 == 0) {
        value = f2_ * p2 * p0 * p0 * p0 - pm * p1 * p1 * p1;
      } else {
        value = p2 * p0 * p0 * p0 - f2_ * pm * p1 * p1 * p1;
      }
    } else {
      const long m = n / 2;
      T p0 = get(m), p2 = get(m + 2), pm = get(m - 1), pmm = get(m - 2), p1 = get(m + 1);
      value = p0 * (p2 * pm * pm - pmm * p1 * p1);
    }
    return memo_.emplace(n, std::move(value)).first->second;
  }

 private:
  T one_;
  T f2_;
  std::map<long, T> memo_;
};

}  // namespace detail

// psi_n in x for odd n >= 1 on a curve with a1 = a3 = 0.
template <class E>
UniPoly<E> division_polynomial(const WeierstrassCurve<E>& c, long n) {
  if (n < 1 || n % 2 == 0) throw DegreeError("division_polynomial needs odd n >= 1");
  const E& z = c.a2;
  detail::DivisionTable<UniPoly<E>, E> table(c, UniPoly<E>::x(z), UniPoly<E>::constant(z.one()));
  return table.get(n);
}

// psi_n(x0) computed by running the recurrence on values.
template <class E>
E division_polynomial_value(const WeierstrassCurve<E>& c, long n, const E& x0) {
  if (n < 1 || n % 2 == 0) throw DegreeError("division_polynomial needs odd n >= 1");
  detail::DivisionTable<E, E> table(c, x0, x0.one());
  return table.get(n);
}

// All points with x-coordinate x0 (characteristic != 2).
template <class E>
std::vector<ECPoint<E>> lift_x(const WeierstrassCurve<E>& c, const E& x0, const SqrtOptions& opts = {}) {
  const E two = x0.from_int(2);
  if (two.is_zero()) throw UnsupportedForm("lift_x needs characteristic != 2");
  const E lin = c.a1 * x0 + c.a3;
  const E rhs = x0 * x0 * x0 + c.a2 * x0 * x0 + c.a4 * x0 + c.a6;
  const E disc = lin * lin + rhs * x0.from_int(4);
  const auto s = sqrt_in_field(disc, opts);
  if (!s) return {};
  const E y1 = (-lin + *s) / two;
  const E y2 = (-lin - *s) / two;
  if (y1 == y2) return {ECPoint<E>::affine(x0, y1)};
  return {ECPoint<E>::affine(x0, y1), ECPoint<E>::affine(x0, y2)};
}

// y^2 = c6 x^3 + c4 x^2 + c2 x + c0 mapped to y^2 = x^3 + c4 x^2 + c2 c6 x + c0 c6^2 by
// (x, y) -> (c6 x, c6 y).
template <class E>
struct MonicScaling {
  E c6, c4, c2, c0;
  WeierstrassCurve<E> curve;

  MonicScaling(E c6_, E c4_, E c2_, E c0_)
      : c6(std::move(c6_)), c4(std::move(c4_)), c2(std::move(c2_)), c0(std::move(c0_)),
        curve(WeierstrassCurve<E>::short_form(c4, c2 * nonzero(c6), c0 * c6 * c6)) {}

  ECPoint<E> forward(const ECPoint<E>& p) const {
    if (p.infinity) return p;
    return ECPoint<E>::affine(c6 * p.x, c6 * p.y);
  }
  ECPoint<E> inverse(const ECPoint<E>& p) const {
    if (p.infinity) return p;
    return ECPoint<E>::affine(p.x / c6, p.y / c6);
  }
  bool on_source(const ECPoint<E>& p) const {
    if (p.infinity) return true;
    const E& x = p.x;
    return p.y * p.y == ((c6 * x + c4) * x + c2) * x + c0;
  }

 private:
  static const E& nonzero(const E& v) {
    if (v.is_zero()) throw DegreeError("monic_scaling needs c6 != 0");
    return v;
  }
};

template <class E>
MonicScaling<E> monic_scaling(const E& c6, const E& c4, const E& c2, const E& c0) {
  return MonicScaling<E>(c6, c4, c2, c0);
}

}  // namespace modcurve
