#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcurve/ellcurve.hpp"
#include "modcurve/genus2.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/poly.hpp"
#include "modcurve/rational.hpp"

namespace modcurve::ref {

// X1(13): y^2 = x^6 + 4x^5 + 6x^4 + 2x^3 + x^2 + 2x + 1 over K.
UniPoly<Rational> x13_f_rational();
UniPoly<NFElement> x13_f();
HyperCurve<NFElement> x13_curve();
// Elliptic involution x -> (x + b)/(cx - 1).
NFElement x13_b();
NFElement x13_c();
MoebiusMap<NFElement> x13_involution();

struct LabelledPoint {
  std::string label;
  CurvePoint<NFElement> point;
};
// inf1 = inf-, inf2 = inf+, the rational affine cusps, then the three K-rational pairs.
std::vector<LabelledPoint> x13_cusps();

// Reference values.
NFElement x13_d1_reference();
NFElement x13_d2_reference();
EvenCoefficients<NFElement> x13_even_reference();
NFElement x13_eprime_b();
NFElement x13_eprime_c();
NFElement x13_eprime_d();
NFElement x13_xP();
Integer x13_discriminant_reference();  // 2^12 * 13^2

// X0(37): y^2 = f(x) with f = x^6/4 + 2x^5 - 5x^4 + 7x^3 - 6x^2 + 3x - 1, and the working
// model y^2 - x^3 y = g(x).
UniPoly<Rational> x37_f();
UniPoly<Rational> x37_g();
UniPoly<Rational> x37_h();
HyperCurve<Rational> x37_curve();
MoebiusMap<Rational> x37_involution();
EvenCoefficients<Rational> x37_even_reference();
// E: y^2 + y = x^3 - x with generator (0, 0).
WeierstrassCurve<Rational> e37();
ECPoint<Rational> e37_generator();

// A reference table row over Q(a), a^2 = D. Quadratic elements are (u, v) meaning u + v a.
struct QuadValue {
  Rational u, v;
};
struct TableRow {
  long D;
  QuadValue x, y;
  enum class CurveKind { Pair, JZero, J1728, JOnly } kind;
  QuadValue A, B;  // for Pair
  QuadValue j;     // for JOnly
};
std::vector<TableRow> reference_table();

}  // namespace modcurve::ref
