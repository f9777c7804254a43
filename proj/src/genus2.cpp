#include "modcurve/genus2.hpp"

namespace modcurve {

UniPoly<FqElement> reduce_poly(const UniPoly<NFElement>& p, const std::shared_ptr<const FiniteField>& field) {
  std::vector<FqElement> cs;
  cs.reserve(p.size());
  for (const auto& c : p.coeffs()) cs.push_back(residue_reduce(c, field));
  return UniPoly<FqElement>(std::move(cs), field->zero());
}

HyperCurve<FqElement> reduce_curve(const HyperCurve<NFElement>& c, const std::shared_ptr<const FiniteField>& field) {
  if (field->characteristic() == 2) throw BadReduction("characteristic 2");
  const auto g = reduce_poly(c.g, field);
  const auto h = reduce_poly(c.h, field);
  const auto f = g + h * h * field->from_int(4).inv();
  if (f.degree() != c.f().degree() || discriminant(f).is_zero()) {
    throw BadReduction("curve has bad reduction modulo a prime above " + std::to_string(field->characteristic()));
  }
  return HyperCurve<FqElement>(g, h);
}

MumfordClass<FqElement> reduce_class(const HyperCurve<NFElement>& c, const MumfordClass<NFElement>& d,
                                     const std::shared_ptr<const FiniteField>& field) {
  const JacobianGroup<FqElement> jac(reduce_curve(c, field));
  MumfordClass<FqElement> r{reduce_poly(d.u, field), reduce_poly(d.v, field), d.n};
  if (!jac.is_valid(r)) throw Inconsistent("reduced class is not semi-reduced");
  return jac.canonicalize(r);
}

std::uint64_t curve_count(const HyperCurve<FqElement>& c) {
  const auto f = c.f();
  const auto& field = f.lc().field();
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < field->size(); ++i) {
    const FqElement v = f.eval(field->element(i));
    if (v.is_zero()) {
      n += 1;
    } else if (v.is_square()) {
      n += 2;
    }
  }
  if (f.degree() == 6) {
    if (f.lc().is_square()) n += 2;
  } else {
    n += 1;
  }
  return n;
}

namespace {

UniPoly<FqElement> lift(const UniPoly<Fp>& p, const std::shared_ptr<const FiniteField>& field) {
  std::vector<FqElement> cs;
  for (const auto& c : p.coeffs()) cs.push_back(field->from_prime(c));
  return UniPoly<FqElement>(std::move(cs), field->zero());
}

}  // namespace

std::uint64_t curve_count(const HyperCurve<Fp>& c, unsigned k) {
  const std::uint64_t p = c.g.lc().modulus();
  const auto field = k == 1 ? FiniteField::prime(p) : FiniteField::extension(p, k);
  return curve_count(HyperCurve<FqElement>(lift(c.g, field), lift(c.h, field)));
}

UniPoly<Rational> l_polynomial(const Integer& q, const Integer& n1, const Integer& n2) {
  const Rational s1(Integer(q + 1 - n1));
  const Rational s2(Integer(q * q + 1 - n2));
  const Rational e1 = s1;
  const Rational e2 = (s1 * s1 - s2) / Rational(2);
  const Rational qq(q);
  return UniPoly<Rational>(std::vector<Rational>{Rational(1), -e1, e2, -qq * e1, qq * qq});
}

Integer jacobian_order_from_l(const UniPoly<Rational>& l, unsigned k) {
  auto t = UniPoly<Rational>::monomial(Rational(1), k) - UniPoly<Rational>::constant(Rational(1));
  const Rational r = resultant(t, l);
  if (r.den() != 1) throw Inconsistent("non-integral Jacobian order");
  return r.num();
}

Integer jacobian_order(const HyperCurve<Fp>& c, unsigned k) {
  const std::uint64_t p = c.g.lc().modulus();
  const Integer n1 = curve_count(c, 1);
  const Integer n2 = curve_count(c, 2);
  return jacobian_order_from_l(l_polynomial(Integer(p), n1, n2), k);
}

HyperCurve<Fp> reduce_curve_mod_p(const UniPoly<Rational>& f, std::uint64_t p) {
  std::vector<Fp> cs;
  for (const auto& c : f.coeffs()) cs.push_back(Fp::from_rational(p, c));
  UniPoly<Fp> g(std::move(cs), Fp(p, 0));
  if (g.degree() != f.degree()) throw BadReduction("leading coefficient vanishes mod " + std::to_string(p));
  try {
    return HyperCurve<Fp>(g);
  } catch (const DegreeError&) {
    throw;
  } catch (const Error&) {
    throw BadReduction("curve is singular mod " + std::to_string(p));
  }
}

}  // namespace modcurve
