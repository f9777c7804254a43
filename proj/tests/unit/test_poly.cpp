#include <random>

#include "doctest.h"
#include "modcurve/poly.hpp"
#include "support/generators.hpp"

using namespace modcurve;

namespace {

const NFElement a = NFElement::generator();

NFElement nf(std::array<long, 6> c, long den = 1) { return NFElement::from_coeffs(c, den); }

UniPoly<NFElement> f13() {
  std::vector<NFElement> c;
  for (long v : {1, 2, 1, 2, 6, 4, 1}) c.emplace_back(v);
  return UniPoly<NFElement>(std::move(c));
}

UniPoly<Rational> f37() {
  auto f = rational_poly({-1, 3, -6, 7, -5, 2});
  f.set_coeff(6, Rational(1, 4));
  return f;
}

const NFElement b13 = nf({0, -6, 0, 5, 0, -1});
const NFElement c13 = nf({-1, -6, 0, 5, 0, -1});

UniPoly<Rational> random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(testgen::random_rational(rng, 6));
  Rational lead = 0;
  while (lead.is_zero()) lead = testgen::random_rational(rng, 6);
  c.push_back(lead);
  return UniPoly<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("moebius_is_involution") {
  const Rational one(1), zero(0);
  CHECK(moebius_is_involution(MoebiusMap<Rational>(-one, zero, zero, one)));
  CHECK(!moebius_is_involution(MoebiusMap<Rational>(one, one, zero, one)));
  CHECK(!moebius_is_involution(MoebiusMap<Rational>::identity(one)));
  CHECK(moebius_is_involution(MoebiusMap<NFElement>(NFElement(1), b13, c13, NFElement(-1))));
  CHECK(moebius_is_involution(MoebiusMap<Rational>(one, zero, one, -one)));
  CHECK_THROWS_AS(MoebiusMap<Rational>(one, one, one, one), Error);
}

TEST_CASE("moebius_transform_sextic") {
  const auto f = f13();
  CHECK(moebius_transform_sextic(f, MoebiusMap<NFElement>::identity(NFElement(1))) == f);

  const auto g = moebius_transform_sextic(f, MoebiusMap<NFElement>(NFElement(1), b13, c13, NFElement(-1)));
  const auto lambda = proportionality_factor(g, f);
  REQUIRE(lambda.has_value());
  CHECK(!lambda->is_zero());

  const auto h = moebius_transform_sextic(f37(), MoebiusMap<Rational>(1, 0, 1, -1));
  const auto mu = proportionality_factor(h, f37());
  REQUIRE(mu.has_value());
  CHECK(*mu == Rational(1));

  // x -> x + 1 does not preserve the branch locus.
  const auto t = moebius_transform_sextic(f, MoebiusMap<NFElement>(NFElement(1), NFElement(1), NFElement(0), NFElement(1)));
  CHECK(!proportionality_factor(t, f).has_value());

  CHECK_THROWS_AS(moebius_transform_sextic(rational_poly({1, 0, 1}), MoebiusMap<Rational>::identity(1)), DegreeError);
}

TEST_CASE("moebius transform respects composition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 6);
    auto rand_map = [&] {
      for (;;) {
        Rational p = testgen::random_rational(rng, 5), q = testgen::random_rational(rng, 5);
        Rational r = testgen::random_rational(rng, 5), s = testgen::random_rational(rng, 5);
        if (!(p * s - q * r).is_zero()) return MoebiusMap<Rational>(p, q, r, s);
      }
    };
    const auto m1 = rand_map();
    const auto m2 = rand_map();
    const auto lhs = moebius_transform_sextic(f, m1.compose(m2));
    const auto inner = moebius_transform_sextic(f, m1);
    if (inner.degree() != 6) continue;
    CHECK(lhs == moebius_transform_sextic(inner, m2));
  }
}

TEST_CASE("solve_d_pair") {
  const auto [d1, d2] = solve_d_pair(b13, c13);
  const NFElement listed1 = nf({1, 0, -6, 3, 2, -1});
  const NFElement listed2 = nf({-5, 6, 8, -5, -2, 1});
  CHECK(d1 == listed2);
  CHECK(d2 == listed1);
  CHECK(d1 + d2 == NFElement(-2) / c13);
  CHECK(d1 * d2 == -b13 / c13);

  const auto [e1, e2] = solve_d_pair(Rational(0), Rational(1));
  CHECK(e1 == Rational(-2));
  CHECK(e2 == Rational(0));

  CHECK_THROWS_AS(solve_d_pair(Rational(1), Rational(0)), DegenerateInvolution);
  // t^2 + 2t - 1 has discriminant 8.
  CHECK_THROWS_AS(solve_d_pair(Rational(1), Rational(1)), NotSplit);
}

TEST_CASE("solve_even_model on X1(13)") {
  const auto [d1, d2] = solve_d_pair(b13, c13);
  const auto c = solve_even_model(f13(), d1, d2);
  CHECK(c.c0 == nf({175, -218, -193, 240, 48, -52}, 208));
  CHECK(c.c2 == nf({-25, -77, 38, 99, 0, -18}, 208));
  CHECK(c.c4 == nf({69, 296, -9, -238, 0, 40}, 208));
  CHECK(c.c6 == nf({-11, -1, 164, -101, -48, 30}, 208));
  CHECK(even_model_expand(c, d1, d2) == f13());
}

TEST_CASE("solve_even_model on X0(37)") {
  const auto c = solve_even_model(f37(), Rational(-2), Rational(0));
  const Rational s(-1, 64);
  CHECK(c.c6 == s);
  CHECK(c.c4 == s * 9);
  CHECK(c.c2 == s * 11);
  CHECK(c.c0 == s * -37);
  CHECK_THROWS_AS(solve_even_model(f37(), Rational(1), Rational(1)), DegenerateInvolution);
  // f37 is not in the span for a wrong d-pair.
  CHECK_THROWS_AS(solve_even_model(f37(), Rational(-1), Rational(0)), Inconsistent);
}

TEST_CASE("solve_even_model round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    EvenCoefficients<NFElement> c{testgen::random_nf(rng), testgen::random_nf(rng), testgen::random_nf(rng),
                                  testgen::random_nf(rng)};
    const NFElement d1 = testgen::random_nf(rng);
    const NFElement d2 = testgen::random_nf(rng);
    if (d1 == d2) continue;
    const auto f = even_model_expand(c, d1, d2);
    const auto back = solve_even_model(f, d1, d2);
    CHECK(back.c6 == c.c6);
    CHECK(back.c4 == c.c4);
    CHECK(back.c2 == c.c2);
    CHECK(back.c0 == c.c0);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(rational_poly({-1, 0, 1})) == Rational(4));
  CHECK(discriminant(rational_poly({1, 1, 1})) == Rational(-3));
  CHECK(discriminant(f13()) == NFElement(-692224));
  CHECK(discriminant(rational_poly({1, 2, 1, 2, 6, 4, 1})) == Rational(-692224));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 2 + static_cast<int>(rng() % 2));
    const auto g = random_poly(rng, 2 + static_cast<int>(rng() % 2));
    const Rational r = resultant(f, g);
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
  }
}
