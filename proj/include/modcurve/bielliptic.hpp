#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/ellcurve.hpp"
#include "modcurve/errors.hpp"
#include "modcurve/genus2.hpp"
#include "modcurve/poly.hpp"
#include "modcurve/quad_ext.hpp"
#include "modcurve/sqrt.hpp"

namespace modcurve {

// B(sqrt(s)) together with an element whose square is s.
template <class B>
struct AdjoinedRoot {
  QuadFieldPtr<B> field;
  QuadExt<B> root;
};

inline AdjoinedRoot<Rational> adjoin_sqrt(const Rational& s, const SqrtOptions& = {}) {
  const auto q = make_quadratic_field(s);
  return {q.field, QuadExt<Rational>(q.field, Rational(0), q.scale)};
}

inline AdjoinedRoot<NFElement> adjoin_sqrt(const NFElement& s, const SqrtOptions& opts = {}) {
  const auto field = make_quadratic_field(s, opts);
  return {field, QuadExt<NFElement>::sqrt_radicand(field)};
}

// A preimage point: over the base field or over a quadratic extension of it.
template <class B>
struct FiberPoint {
  std::optional<CurvePoint<B>> base;
  std::optional<CurvePoint<QuadExt<B>>> quad;
  int multiplicity = 1;
  bool is_cusp = false;

  bool is_quadratic() const { return quad.has_value(); }
  std::string to_string() const { return base ? base->to_string() : quad->to_string(); }
};

// Even model y^2 = c6 X^6 + c4 X^4 + c2 X^2 + c0 of a genus-2 curve with elliptic involution
// x -> M(x), through X = (x + d1)/(x + d2), Y = y_f/(x + d2)^3 where y_f = y + h(x)/2.
template <class B>
struct EvenModelData {
  HyperCurve<B> source;
  MoebiusMap<B> involution;
  B d1, d2;
  EvenCoefficients<B> coeffs;
  B lambda;  // f(M x) (r x + s)^6 = lambda f(x)
  B infinity_slope;  // Y at the points over x = infinity; lc(f) = infinity_slope^2

  // E: y^2 = c6 x^3 + c4 x^2 + c2 x + c0 (the curve receiving quotient_point).
  bool on_quotient(const ECPoint<B>& q) const {
    if (q.infinity) return true;
    return q.y * q.y == ((coeffs.c6 * q.x + coeffs.c4) * q.x + coeffs.c2) * q.x + coeffs.c0;
  }
  MonicScaling<B> monic() const { return monic_scaling(coeffs.c6, coeffs.c4, coeffs.c2, coeffs.c0); }
};

namespace detail {

template <class B>
B canonical_root(const B& r) {
  const B neg = -r;
  return coordinate_compare(r, neg) >= 0 ? r : neg;
}

}  // namespace detail

template <class B>
EvenModelData<B> build_even_model(const HyperCurve<B>& c, const MoebiusMap<B>& m) {
  if (!moebius_is_involution(m)) throw DegenerateInvolution("map is not an involution");
  const UniPoly<B> f = c.f();
  if (f.degree() != 6) throw DegreeError("even model needs a sextic");
  const auto lambda = proportionality_factor(moebius_transform_sextic(f, m), f);
  if (!lambda) throw Inconsistent("involution does not preserve the branch locus");
  if (m.p.is_zero()) throw UnsupportedForm("involution with p = 0");
  const B b = m.q / m.p;
  const B cc = m.r / m.p;
  auto [d1, d2] = solve_d_pair(b, cc);
  auto coeffs = solve_even_model(f, d1, d2);
  const auto slope = sqrt_in_field(f.lc());
  if (!slope) throw UnsupportedForm("points at infinity are not rational");
  return EvenModelData<B>{c, m, d1, d2, coeffs, *lambda, detail::canonical_root(*slope)};
}

// Image (X^2, Y) on E of a point with coordinates in T (T = B or an extension of it).
template <class B, class T>
ECPoint<T> quotient_point(const EvenModelData<B>& emd, const CurvePoint<T>& p, const T& like) {
  if (!on_curve(emd.source, p)) throw PointNotOnCurve("point " + p.to_string() + " is not on the curve");
  auto k = [&](const B& e) { return detail::embed_into(like, e); };
  if (!p.is_affine()) {
    const B y = p.kind == PointKind::InfinityPlus ? emd.infinity_slope : -emd.infinity_slope;
    return ECPoint<T>::affine(like.one(), k(y));
  }
  const T den = p.x + k(emd.d2);
  if (den.is_zero()) return ECPoint<T>::at_infinity();
  const T X = (p.x + k(emd.d1)) / den;
  const T yf = p.y + emd.source.h.eval_with(p.x, k) * k(emd.d1.from_int(2).inv());
  return ECPoint<T>::affine(X * X, yf / (den * den * den));
}

template <class B>
ECPoint<B> quotient_point(const EvenModelData<B>& emd, const CurvePoint<B>& p) {
  return quotient_point(emd, p, emd.d1);
}

namespace detail {

// Source point over x = (d1 - X d2)/(X - 1) with Y given, or a point at infinity when X = 1.
template <class B, class T>
CurvePoint<T> fiber_point(const EvenModelData<B>& emd, const T& X, const T& Y) {
  auto k = [&](const B& e) { return embed_into(X, e); };
  const T one = X.one();
  if (X == one) {
    if (Y == k(emd.infinity_slope)) return CurvePoint<T>::infinity_plus();
    if (Y == k(-emd.infinity_slope)) return CurvePoint<T>::infinity_minus();
    throw PointNotOnCurve("point over X = 1 does not lie over infinity");
  }
  const T x = (k(emd.d1) - X * k(emd.d2)) / (X - one);
  const T den = x + k(emd.d2);
  const T yf = Y * den * den * den;
  const T y = yf - emd.source.h.eval_with(x, k) * k(emd.d1.from_int(2).inv());
  return CurvePoint<T>::affine(x, y);
}

}  // namespace detail

// All preimages of a point of E (counted with multiplicity), adjoining sqrt(x_Q) when needed.
template <class B>
std::vector<FiberPoint<B>> pullback_fiber(const EvenModelData<B>& emd, const ECPoint<B>& q,
                                          const SqrtOptions& opts = {}) {
  if (!emd.on_quotient(q)) throw PointNotOnCurve("point " + q.to_string() + " is not on the quotient");
  const B& d1 = emd.d1;
  const B& d2 = emd.d2;
  std::vector<FiberPoint<B>> out;
  if (q.infinity) {
    // X = infinity: x = -d2 and y_f^2 = f(-d2).
    const B x = -d2;
    const B h2 = emd.source.h.eval(x) * d1.from_int(2).inv();
    const B fx = emd.source.f().eval(x);
    if (fx.is_zero()) {
      out.push_back({CurvePoint<B>::affine(x, -h2), std::nullopt, 2, false});
      return out;
    }
    if (auto r = sqrt_in_field(fx, opts)) {
      out.push_back({CurvePoint<B>::affine(x, *r - h2), std::nullopt, 1, false});
      out.push_back({CurvePoint<B>::affine(x, -*r - h2), std::nullopt, 1, false});
      return out;
    }
    const auto ext = adjoin_sqrt(fx, opts);
    const auto X = QuadExt<B>::from_base(ext.field, x);
    const auto H = QuadExt<B>::from_base(ext.field, h2);
    out.push_back({std::nullopt, CurvePoint<QuadExt<B>>::affine(X, ext.root - H), 1, false});
    out.push_back({std::nullopt, CurvePoint<QuadExt<B>>::affine(X, -ext.root - H), 1, false});
    return out;
  }
  if (q.x.is_zero()) {
    out.push_back({detail::fiber_point(emd, q.x, q.y), std::nullopt, 2, false});
    return out;
  }
  if (auto r = sqrt_in_field(q.x, opts)) {
    for (const B& X : {*r, -*r}) out.push_back({detail::fiber_point(emd, X, q.y), std::nullopt, 1, false});
    return out;
  }
  const auto ext = adjoin_sqrt(q.x, opts);
  const auto Y = QuadExt<B>::from_base(ext.field, q.y);
  for (const auto& X : {ext.root, -ext.root}) {
    out.push_back({std::nullopt, detail::fiber_point(emd, X, Y), 1, false});
  }
  return out;
}

}  // namespace modcurve
