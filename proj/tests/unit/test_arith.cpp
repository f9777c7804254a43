#include <random>

#include "doctest.h"
#include "modcurve/factor.hpp"
#include "modcurve/finite_field.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/quad_ext.hpp"
#include "modcurve/sqrt.hpp"
#include "support/generators.hpp"

using namespace modcurve;

namespace {

const NFElement a = NFElement::generator();

UniPoly<Fp> fp_poly(std::uint64_t p, std::initializer_list<long> cs) {
  std::vector<Fp> v;
  for (long c : cs) v.emplace_back(p, c);
  return UniPoly<Fp>(std::move(v), Fp(p, 0));
}

UniPoly<Fp> expand(const std::vector<FactorPower>& fs, std::uint64_t p) {
  UniPoly<Fp> acc = UniPoly<Fp>::constant(Fp(p, 1));
  for (const auto& f : fs) acc = acc * pow(f.factor, f.multiplicity);
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational::parse(" -7 ").to_string() == "-7");
  CHECK(Rational(10, 4).to_string() == "5/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
}

TEST_CASE("squarefree decomposition") {
  auto [s, r] = squarefree_decomposition(Integer(-12));
  CHECK(s == -3);
  CHECK(r == 2);
  auto [s2, r2] = squarefree_decomposition(Integer("4521"));
  CHECK(s2 == 4521);
  CHECK(r2 == 1);
  // 2^4 * 3^3 * 1000003^2
  Integer n = Integer(16) * 27 * Integer("1000003") * Integer("1000003");
  auto [s3, r3] = squarefree_decomposition(n);
  CHECK(s3 == 3);
  CHECK(r3 == Integer(4) * 3 * Integer("1000003"));
}

TEST_CASE("nf_inv examples") {
  CHECK(NFElement(1).inv() == NFElement(1));
  // a * (a^5 - a^4 - 5a^3 + 4a^2 + 6a - 3) = 1 because the minimal polynomial has constant term -1.
  const NFElement expected = NFElement::from_coeffs({-3, 6, 4, -5, -1, 1});
  CHECK(a * expected == NFElement(1));
  CHECK(a.inv() == expected);
  CHECK_THROWS_AS(NFElement(0).inv(), DivisionByZero);
}

TEST_CASE("minimal polynomial vanishes at a") {
  const auto& m = NumberFieldDesc::instance().minimal_polynomial();
  CHECK(m.eval_with(a, [](const Rational& r) { return NFElement(r); }).is_zero());
  CHECK(NumberFieldDesc::instance().real_roots().size() == 6);
}

TEST_CASE("field axioms in K on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const NFElement x = testgen::random_nf(rng);
    const NFElement y = testgen::random_nf(rng);
    const NFElement z = testgen::random_nf(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == NFElement(0));
    if (!x.is_zero()) CHECK(x * x.inv() == NFElement(1));
  }
}

TEST_CASE("factor_mod_p on the minimal polynomial of K") {
  const auto& m = NumberFieldDesc::instance().minimal_polynomial();
  const auto at3 = factor_mod_p(m, 3);
  REQUIRE(at3.size() == 2);
  for (const auto& f : at3) {
    CHECK(f.factor.degree() == 3);
    CHECK(f.multiplicity == 1);
    CHECK(is_irreducible(f.factor));
  }
  CHECK(!(at3[0].factor == at3[1].factor));
  CHECK(expand(at3, 3) == reduce_mod_p(m, 3));

  const auto at5 = factor_mod_p(m, 5);
  REQUIRE(at5.size() == 3);
  for (const auto& f : at5) {
    CHECK(f.factor.degree() == 2);
    CHECK(f.multiplicity == 1);
  }
  CHECK(expand(at5, 5) == reduce_mod_p(m, 5));

  // 13 is totally ramified: (x + 2)^6.
  const auto at13 = factor_mod_p(m, 13);
  REQUIRE(at13.size() == 1);
  CHECK(at13[0].factor == fp_poly(13, {2, 1}));
  CHECK(at13[0].multiplicity == 6);

  // 7 is inert.
  const auto at7 = factor_mod_p(m, 7);
  REQUIRE(at7.size() == 1);
  CHECK(at7[0].factor.degree() == 6);
}

TEST_CASE("factor_mod_p small cases and errors") {
  const auto f = factor_mod_p(rational_poly({-1, 0, 1}), 3);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == fp_poly(3, {1, 1}));
  CHECK(f[1].factor == fp_poly(3, {2, 1}));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].multiplicity == 1);

  UniPoly<Rational> g = rational_poly({1, 1});
  g.set_coeff(0, Rational(1, 3));
  CHECK_THROWS_AS(factor_mod_p(g, 3), NotPIntegral);
  CHECK_THROWS_AS(factor_mod_p(rational_poly({5}), 3), DegreeError);
}

TEST_CASE("factor_fp re-multiplies to its input and ignores the seed") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 31ULL}) {
    for (int trial = 0; trial < 25; ++trial) {
      // Products of random factors, some repeated, exercise the squarefree stage.
      UniPoly<Fp> g = UniPoly<Fp>::constant(Fp(p, 1));
      const int parts = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < parts; ++i) {
        UniPoly<Fp> h = testgen::random_monic_fp(rng, p, 1 + static_cast<int>(rng() % 4));
        g = g * h;
        if (rng() % 3 == 0) g = g * h;
      }
      if (rng() % 4 == 0) g = pow(g, p);
      const auto fs = factor_fp(g, 0);
      CHECK(expand(fs, p) == g);
      for (const auto& f : fs) CHECK(is_irreducible(f.factor));
      for (std::size_t i = 1; i < fs.size(); ++i) CHECK(!(fs[i - 1].factor == fs[i].factor));
      const auto other = factor_fp(g, 12345);
      REQUIRE(other.size() == fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(other[i].factor == fs[i].factor);
        CHECK(other[i].multiplicity == fs[i].multiplicity);
      }
    }
  }
}

TEST_CASE("finite field construction and arithmetic") {
  CHECK_THROWS_AS(FiniteField::create(3, fp_poly(3, {2, 0, 1})), Error);  // x^2 - 1 is reducible
  const auto f9 = FiniteField::extension(3, 2);
  CHECK(f9->size() == 9);
  int squares = 0;
  for (std::uint64_t i = 0; i < 9; ++i) {
    const FqElement e = f9->element(i);
    CHECK(e.index() == i);
    if (!e.is_zero()) CHECK(e * e.inv() == f9->one());
    if (e.is_square()) {
      ++squares;
      auto r = e.sqrt();
      REQUIRE(r.has_value());
      CHECK(*r * *r == e);
    } else {
      CHECK(!e.sqrt().has_value());
    }
  }
  CHECK(squares == 5);
  const auto f8 = FiniteField::extension(2, 3);
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto r = f8->element(i).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == f8->element(i));
  }
}

TEST_CASE("residue_reduce is a ring homomorphism into F_27 and F_25") {
  for (std::uint64_t p : {3ULL, 5ULL}) {
    const auto fields = residue_fields_above(p);
    for (const auto& F : fields) {
      CHECK(residue_reduce(NFElement(1), F) == F->one());
      CHECK(residue_reduce(a, F) == F->gen());
      const FqElement ra = residue_reduce(a, F);
      CHECK(residue_reduce(a.inv(), F) == ra.inv());
      CHECK(residue_reduce(a.inv(), F) * ra == F->one());
      std::mt19937_64 rng(p);
      for (int trial = 0; trial < 30; ++trial) {
        const NFElement x = testgen::random_nf(rng, p);
        const NFElement y = testgen::random_nf(rng, p);
        CHECK(residue_reduce(x * y, F) == residue_reduce(x, F) * residue_reduce(y, F));
        CHECK(residue_reduce(x + y, F) == residue_reduce(x, F) + residue_reduce(y, F));
      }
    }
  }
  const auto f27 = residue_fields_above(3).front();
  CHECK(f27->size() == 27);
  CHECK_THROWS_AS(residue_reduce(NFElement(Rational(1, 3)), f27), NotPIntegral);
}

TEST_CASE("sqrt_in_field examples") {
  CHECK(*sqrt_in_field(Rational(4)) == Rational(2));
  CHECK(!sqrt_in_field(Rational(2)).has_value());
  CHECK(*sqrt_in_field(Rational(9, 49)) == Rational(3, 7));

  const NFElement d1 = NFElement::from_coeffs({1, 0, -6, 3, 2, -1});
  const NFElement d2 = NFElement::from_coeffs({-5, 6, 8, -5, -2, 1});
  const NFElement diff = d1 - d2;
  const auto r = sqrt_in_field(diff * diff);
  REQUIRE(r.has_value());
  CHECK((*r == diff || *r == -diff));

  // a = -2cos(2 pi k / 13) has negative real embeddings.
  bool negative = false;
  for (double v : real_embeddings(a)) negative = negative || v < 0;
  CHECK(negative);
  CHECK(!sqrt_in_field(a).has_value());
  // 13 is a square in K (Q(sqrt 13) is the quadratic subfield).
  const auto r13 = sqrt_in_field(NFElement(13));
  REQUIRE(r13.has_value());
  CHECK(*r13 * *r13 == NFElement(13));
}

TEST_CASE("sqrt_in_field recovers random squares and rejects twisted ones") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    NFElement t = testgen::random_nf(rng);
    if (t.is_zero()) continue;
    t /= NFElement(static_cast<long>(1 + rng() % 50));
    const auto r = sqrt_in_field(t * t);
    REQUIRE(r.has_value());
    CHECK(*r * *r == t * t);
    // 2 is inert-ish enough: t^2 * (a + 3) is a square only if a + 3 is, and it is not.
    CHECK(!sqrt_in_field(t * t * (a + NFElement(3)) * NFElement(5)).has_value());
  }
}

TEST_CASE("quadratic extensions") {
  CHECK_THROWS_AS(make_quadratic_field(Rational(4)), Error);
  const auto q = make_quadratic_field(Rational(-12));
  CHECK(q.field->radicand() == Rational(-3));
  CHECK(q.scale == Rational(2));
  const auto q2 = make_quadratic_field(Rational(-7, 4));
  CHECK(q2.field->radicand() == Rational(-7));
  CHECK(q2.scale == Rational(1, 2));

  CHECK_THROWS_AS(make_quadratic_field(NFElement(13)), Error);
  const auto kf = make_quadratic_field(a + NFElement(3) * NFElement(5));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadExt<NFElement> x(kf, testgen::random_nf(rng), testgen::random_nf(rng));
    const QuadExt<NFElement> y(kf, testgen::random_nf(rng), testgen::random_nf(rng));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    const auto base = QuadExt<NFElement>::from_base(kf, x.u());
    CHECK(base.conj() == base);
    if (!x.is_zero()) CHECK(x * x.inv() == x.one());
  }
  const auto s = QuadExt<NFElement>::sqrt_radicand(kf);
  CHECK(s * s == QuadExt<NFElement>::from_base(kf, kf->radicand()));
}
