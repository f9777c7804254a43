#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/finite_field.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/poly.hpp"
#include "modcurve/quad_ext.hpp"
#include "modcurve/sqrt.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

// y^2 + h(x) y = g(x) with deg g <= 6, deg h <= 3; h = 0 gives y^2 = g.
template <class E>
struct HyperCurve {
  UniPoly<E> g;
  UniPoly<E> h;

  explicit HyperCurve(UniPoly<E> g_) : g(std::move(g_)), h(g.zero_element()) { validate(); }
  HyperCurve(UniPoly<E> g_, UniPoly<E> h_) : g(std::move(g_)), h(std::move(h_)) { validate(); }

  bool has_cross_term() const { return !h.is_zero(); }
  // g + h^2/4, the model y^2 = f obtained by completing the square.
  UniPoly<E> f() const {
    if (h.is_zero()) return g;
    const E four = g.zero_element().from_int(4);
    return g + h * h * four.inv();
  }

 private:
  void validate() const {
    if (g.degree() > 6 || h.degree() > 3) throw DegreeError("genus 2 model needs deg g <= 6 and deg h <= 3");
    const auto ff = f();
    if (ff.degree() < 5) throw DegreeError("genus 2 model needs deg f in {5, 6}");
    if (discriminant(ff).is_zero()) throw Error("singular genus 2 model");
  }
};

enum class PointKind { Affine, InfinityPlus, InfinityMinus };

// Affine (x, y) or one of the two points over x = infinity, labelled by the sign of y/x^3.
template <class T>
struct CurvePoint {
  PointKind kind = PointKind::Affine;
  T x{}, y{};

  static CurvePoint affine(T x, T y) { return CurvePoint{PointKind::Affine, std::move(x), std::move(y)}; }
  static CurvePoint infinity_plus() { return CurvePoint{PointKind::InfinityPlus, T{}, T{}}; }
  static CurvePoint infinity_minus() { return CurvePoint{PointKind::InfinityMinus, T{}, T{}}; }

  bool is_affine() const { return kind == PointKind::Affine; }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.kind != b.kind) return false;
    return a.kind != PointKind::Affine || (a.x == b.x && a.y == b.y);
  }
  std::string to_string() const {
    switch (kind) {
      case PointKind::InfinityPlus:
        return "inf+";
      case PointKind::InfinityMinus:
        return "inf-";
      default:
        return "(" + x.to_string() + ", " + y.to_string() + ")";
    }
  }
};

namespace detail {

template <class T, class E>
T embed_into(const T& like, const E& e) {
  if constexpr (std::is_same_v<T, E>) {
    (void)like;
    return e;
  } else {
    return like.embed(e);
  }
}

}  // namespace detail

// Exact membership. Points at infinity exist exactly when the leading coefficient of the
// completed square is a square (a cross term is only allowed for affine membership).
template <class E, class T>
bool on_curve(const HyperCurve<E>& c, const CurvePoint<T>& p) {
  if (!p.is_affine()) {
    const auto ff = c.f();
    if (ff.degree() != 6) return false;
    return sqrt_in_field(ff.lc()).has_value();
  }
  auto embed = [&](const E& e) { return detail::embed_into(p.x, e); };
  const T gx = c.g.eval_with(p.x, embed);
  const T hx = c.h.eval_with(p.x, embed);
  return p.y * p.y + hx * p.y == gx;
}

// Divisor class D_aff + n inf+ + (2 - deg u - n) inf- - (inf+ + inf-), with D_aff given in
// Mumford form (u, v): u monic of degree <= 2, deg v < deg u, u | f - v^2.
template <class E>
struct MumfordClass {
  UniPoly<E> u;
  UniPoly<E> v;
  int n = 1;

  int m() const { return 2 - u.degree() - n; }
  friend bool operator==(const MumfordClass& a, const MumfordClass& b) {
    return a.n == b.n && a.u == b.u && a.v == b.v;
  }
  std::string to_string() const {
    return "[" + u.to_string() + ", " + v.to_string() + ", " + std::to_string(n) + "]";
  }
};

template <class E>
std::strong_ordering poly_compare(const UniPoly<E>& a, const UniPoly<E>& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    const auto c = coordinate_compare(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Lexicographic order on canonical triples (u, v, n).
template <class E>
struct MumfordLess {
  bool operator()(const MumfordClass<E>& a, const MumfordClass<E>& b) const {
    if (auto c = poly_compare(a.u, b.u); c != 0) return c < 0;
    if (auto c = poly_compare(a.v, b.v); c != 0) return c < 0;
    return a.n < b.n;
  }
};

// Jacobian of y^2 = f with f monic of degree 6 (split model) in characteristic != 2.
template <class E>
class JacobianGroup {
 public:
  explicit JacobianGroup(const HyperCurve<E>& c) : f_(c.f()) {
    if (f_.degree() != 6 || !f_.is_monic()) throw UnsupportedForm("Jacobian arithmetic needs a monic sextic");
    const E z = f_.zero_element();
    const E half = z.from_int(2).inv();
    if (z.from_int(2).is_zero()) throw UnsupportedForm("Jacobian arithmetic needs characteristic != 2");
    // V = x^3 + v2 x^2 + v1 x + v0 with deg(f - V^2) <= 2
    const E v2 = f_.coeff(5) * half;
    const E v1 = (f_.coeff(4) - v2 * v2) * half;
    const E v0 = (f_.coeff(3) - v1 * v2 * z.from_int(2)) * half;
    V_ = UniPoly<E>(std::vector<E>{v0, v1, v2, z.one()}, z);
  }

  const UniPoly<E>& f() const { return f_; }
  const UniPoly<E>& V() const { return V_; }

  MumfordClass<E> identity() const { return {one_poly(), zero_poly(), 1}; }

  bool is_valid(const MumfordClass<E>& d) const {
    const int du = d.u.degree();
    if (du < 0 || du > 2 || !d.u.is_monic()) return false;
    if (d.v.degree() >= du) return false;
    if (d.n < 0 || d.n > 2 - du) return false;
    return ((f_ - d.v * d.v) % d.u).is_zero();
  }

  MumfordClass<E> abel_jacobi(const CurvePoint<E>& p) const {
    switch (p.kind) {
      case PointKind::InfinityMinus:
        return identity();
      case PointKind::InfinityPlus:
        return {one_poly(), zero_poly(), 2};
      default:
        break;
    }
    if (!(p.y * p.y == f_.eval(p.x))) throw PointNotOnCurve("point " + p.to_string() + " is not on the curve");
    return {UniPoly<E>::linear_root(p.x), UniPoly<E>::constant(p.y), 1};
  }

  MumfordClass<E> negate(const MumfordClass<E>& d) const { return {d.u, -d.v, d.m()}; }

  MumfordClass<E> add(const MumfordClass<E>& a, const MumfordClass<E>& b) const {
    // Composition.
    auto [d0, e1, e2] = xgcd(a.u, b.u);
    auto [d, c1, c2] = xgcd(d0, a.v + b.v);
    UniPoly<E> u = (a.u * b.u).exact_div(d * d);
    UniPoly<E> v = ((c1 * e1 * a.u * b.v + c1 * e2 * b.u * a.v + c2 * (a.v * b.v + f_)).exact_div(d)) % u;
    const int r = d.degree();
    int big_n = a.n + b.n + r;
    int big_m = a.m() + b.m() + r;
    if (big_n >= 1 && big_m >= 1) return {u.monic(), v, big_n - 1};
    // Reduction by y - w.
    UniPoly<E> w;
    if (u.degree() == 4) {
      w = v;
    } else {
      const UniPoly<E> target = big_n > 0 ? V_ : -V_;
      w = target - (target - v) % u;
    }
    UniPoly<E> u2 = (f_ - w * w).exact_div(u).monic();
    const int c = 2 - u2.degree();
    const E& lead = w.coeff(3);
    const E one = lead.one();
    UniPoly<E> v2 = (-w) % u2;
    if (lead == one) return {u2, v2, 0};
    if (lead == -one) return {u2, v2, c};
    if (c != 0) throw Inconsistent("unexpected degree drop in Jacobian reduction");
    return {u2, v2, 0};
  }

  MumfordClass<E> canonicalize(const MumfordClass<E>& d) const { return add(d, identity()); }

  MumfordClass<E> scalar_mul(long n, const MumfordClass<E>& d) const {
    MumfordClass<E> base = n < 0 ? negate(d) : d;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    MumfordClass<E> acc = identity();
    while (k > 0) {
      if (k & 1UL) acc = add(acc, base);
      k >>= 1UL;
      if (k > 0) base = add(base, base);
    }
    return acc;
  }

  // Least n <= bound with n d = 0.
  std::optional<long> order(const MumfordClass<E>& d, long bound) const {
    MumfordClass<E> acc = d;
    const auto zero = identity();
    for (long n = 1; n <= bound; ++n) {
      if (acc == zero) return n;
      acc = add(acc, d);
    }
    return std::nullopt;
  }

 private:
  UniPoly<E> one_poly() const { return UniPoly<E>::constant(f_.zero_element().one()); }
  UniPoly<E> zero_poly() const { return UniPoly<E>(f_.zero_element()); }

  UniPoly<E> f_;
  UniPoly<E> V_;
};

template <class E>
MumfordClass<E> jac_add(const HyperCurve<E>& c, const MumfordClass<E>& a, const MumfordClass<E>& b) {
  return JacobianGroup<E>(c).add(a, b);
}

template <class E>
MumfordClass<E> abel_jacobi(const HyperCurve<E>& c, const CurvePoint<E>& p) {
  return JacobianGroup<E>(c).abel_jacobi(p);
}

// Subgroup generated by gens, in breadth-first order from the identity.
template <class E>
std::vector<MumfordClass<E>> subgroup_closure(const JacobianGroup<E>& jac, const std::vector<MumfordClass<E>>& gens,
                                              std::size_t bound = 10000) {
  std::vector<MumfordClass<E>> order{jac.identity()};
  std::map<MumfordClass<E>, std::size_t, MumfordLess<E>> seen{{order.front(), 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      auto s = jac.add(order[head], g);
      if (seen.count(s)) continue;
      if (order.size() >= bound) throw ClosureBoundExceeded("subgroup exceeds " + std::to_string(bound) + " elements");
      seen.emplace(s, order.size());
      order.push_back(std::move(s));
    }
  }
  return order;
}

template <class E>
std::size_t count_deg_lt2(const std::vector<MumfordClass<E>>& classes) {
  std::size_t k = 0;
  for (const auto& d : classes) k += d.u.degree() < 2 ? 1 : 0;
  return k;
}

// Coefficient-wise image of a polynomial over K in a residue field.
UniPoly<FqElement> reduce_poly(const UniPoly<NFElement>& p, const std::shared_ptr<const FiniteField>& field);

// The curve modulo a prime of K. Throws BadReduction in characteristic 2 or if the
// discriminant vanishes in the residue field.
HyperCurve<FqElement> reduce_curve(const HyperCurve<NFElement>& c, const std::shared_ptr<const FiniteField>& field);

// Image of a class under reduction modulo the prime with the given residue field.
MumfordClass<FqElement> reduce_class(const HyperCurve<NFElement>& c, const MumfordClass<NFElement>& d,
                                     const std::shared_ptr<const FiniteField>& field);

// Points of y^2 + h y = g over the finite field carrying the coefficients (naive enumeration).
std::uint64_t curve_count(const HyperCurve<FqElement>& c);
// Points over F_{p^k} of a curve with coefficients in F_p.
std::uint64_t curve_count(const HyperCurve<Fp>& c, unsigned k);

// L(T) = 1 - e1 T + e2 T^2 - q e1 T^3 + q^2 T^4 from N1 = |C(F_q)|, N2 = |C(F_q^2)|.
UniPoly<Rational> l_polynomial(const Integer& q, const Integer& n1, const Integer& n2);
// |J(F_q^k)| = Res(T^k - 1, L).
Integer jacobian_order_from_l(const UniPoly<Rational>& l, unsigned k);
// |J(F_{p^k})| for a curve with coefficients in F_p, from naive counts over F_p and F_{p^2}.
Integer jacobian_order(const HyperCurve<Fp>& c, unsigned k);

// f over Z/p for an integral polynomial.
HyperCurve<Fp> reduce_curve_mod_p(const UniPoly<Rational>& f, std::uint64_t p);

}  // namespace modcurve
