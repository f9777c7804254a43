#include "modcurve/reference_data.hpp"

namespace modcurve::ref {

namespace {

NFElement nf(std::array<long, 6> c, long den = 1) { return NFElement::from_coeffs(c, den); }

QuadValue q(const char* u, const char* v) { return {Rational::parse(u), Rational::parse(v)}; }

}  // namespace

UniPoly<Rational> x13_f_rational() { return rational_poly({1, 2, 1, 2, 6, 4, 1}); }

UniPoly<NFElement> x13_f() {
  return x13_f_rational().map([](const Rational& r) { return NFElement(r); });
}

HyperCurve<NFElement> x13_curve() { return HyperCurve<NFElement>(x13_f()); }

NFElement x13_b() { return nf({0, -6, 0, 5, 0, -1}); }
NFElement x13_c() { return nf({-1, -6, 0, 5, 0, -1}); }

MoebiusMap<NFElement> x13_involution() { return MoebiusMap<NFElement>(NFElement(1), x13_b(), x13_c(), NFElement(-1)); }

std::vector<LabelledPoint> x13_cusps() {
  using P = CurvePoint<NFElement>;
  std::vector<LabelledPoint> out{
      {"inf1", P::infinity_minus()},
      {"inf2", P::infinity_plus()},
      {"(0,1)", P::affine(0, 1)},
      {"(0,-1)", P::affine(0, -1)},
      {"(-1,1)", P::affine(-1, 1)},
      {"(-1,-1)", P::affine(-1, -1)},
  };
  const std::array<std::pair<NFElement, NFElement>, 3> pairs = {{
      {nf({-1, -3, 1, 4, 0, -1}), nf({-5, -21, 19, 31, -6, -6})},
      {nf({2, -3, -1, 1, 0, 0}), nf({33, -26, -66, 43, 18, -11})},
      {nf({0, 6, 0, -5, 0, 1}), nf({12, 45, 5, -32, -4, 5})},
  }};
  int k = 1;
  for (const auto& [x, y] : pairs) {
    out.push_back({"K" + std::to_string(k) + "+", P::affine(x, y)});
    out.push_back({"K" + std::to_string(k) + "-", P::affine(x, -y)});
    ++k;
  }
  return out;
}

NFElement x13_d1_reference() { return nf({1, 0, -6, 3, 2, -1}); }
NFElement x13_d2_reference() { return nf({-5, 6, 8, -5, -2, 1}); }

EvenCoefficients<NFElement> x13_even_reference() {
  return {nf({-11, -1, 164, -101, -48, 30}, 208), nf({69, 296, -9, -238, 0, 40}, 208),
          nf({-25, -77, 38, 99, 0, -18}, 208), nf({175, -218, -193, 240, 48, -52}, 208)};
}

NFElement x13_eprime_b() { return nf({69, 296, -9, -238, 0, 40}, 208); }
NFElement x13_eprime_c() { return nf({-16, -73, -19, 38, 11, -1}, 3328); }
NFElement x13_eprime_d() { return nf({252, 1092, -30, -939, -4, 180}, 692224); }
NFElement x13_xP() { return nf({181, 799, 36, -681, -36, 134}, 208); }
Integer x13_discriminant_reference() { return Integer(4096) * 169; }

UniPoly<Rational> x37_f() {
  auto f = rational_poly({-1, 3, -6, 7, -5, 2});
  f.set_coeff(6, Rational(1, 4));
  return f;
}
UniPoly<Rational> x37_g() { return rational_poly({-1, 3, -6, 7, -5, 2}); }
UniPoly<Rational> x37_h() { return rational_poly({0, 0, 0, -1}); }
HyperCurve<Rational> x37_curve() { return HyperCurve<Rational>(x37_g(), x37_h()); }
MoebiusMap<Rational> x37_involution() { return MoebiusMap<Rational>(1, 0, 1, -1); }

EvenCoefficients<Rational> x37_even_reference() {
  const Rational s(-1, 64);
  return {s, s * 9, s * 11, s * -37};
}

WeierstrassCurve<Rational> e37() { return WeierstrassCurve<Rational>(0, 0, 1, -1, 0); }
ECPoint<Rational> e37_generator() { return ECPoint<Rational>::affine(0, 0); }

std::vector<TableRow> reference_table() {
  using K = TableRow::CurveKind;
  const QuadValue none{};
  return {
      {-3, q("1/2", "-1/2"), q("0", "0"), K::Pair, q("-3285/2", "315/2"), q("-24948", "3630"), none},
      {-7, q("1/4", "-1/4"), q("0", "0"), K::Pair, q("6345/8", "-765/8"), q("-40635/8", "-30753/8"), none},
      {-11, q("1/6", "-1/6"), q("-4/9", "1/9"), K::Pair, q("2848/3", "-640/3"), q("356048/27", "75040/27"), none},
      {-1, q("2/5", "-4/5"), q("-11/25", "2/25"), K::J1728, none, none, none},
      {-3, q("1/14", "-3/14"), q("20/49", "-18/49"), K::JZero, none, none, none},
      {-7, q("9/8", "-3/8"), q("9/16", "5/16"), K::Pair, q("-207315/32", "34425/32"), q("-11925711/64", "3224205/64"),
       none},
      {-159, q("25/92", "-5/92"), q("-1695/8464", "63/8464"), K::JOnly, none, none,
       q("394997768625969/274877906944", "1992776643585/274877906944")},
      {-67, q("49/58", "-7/58"), q("-1995/841", "-150/841"), K::Pair, q("-16964640/841", "126720/841"),
       q("26856906048/24389", "-301386960/24389"), none},
      {-173, q("8/177", "-4/177"), q("-36050/93987", "5635/93987"), K::Pair, q("214423015/93987", "-2366000/93987"),
       q("1346165714530/149721291", "473705169712/149721291"), none},
      {-2051, q("529/1290", "-23/1290"), q("-452732/2080125", "1624/2080125"), K::Pair,
       q("-6547514791/6933750", "-269113/6933750"), q("-383038176258584/33542015625", "-3221900558162/33542015625"),
       none},
      {-7951, q("841/4396", "-29/4396"), q("3837251/16909214", "-31211/16909214"), K::Pair,
       q("825198488937/473457992", "2989314135/473457992"),
       q("46768183795198699/3642312332456", "-1023161515376435/3642312332456"), none},
      {4521, q("-3481/520", "-59/520"), q("-167683133/540800", "-2495247/540800"), K::Pair,
       q("-1272066914239/10816000", "-12322582501/10816000"),
       q("1250157035949620211/5061888000", "20998975870933249/5061888000"), none},
      {-124027, q("16641/70334", "-129/70334"), q("-9806545170/28444511447", "15848993/28444511447"), K::Pair,
       q("792633701552976/2081621064985", "-3683948697936/2081621064985"),
       q("625337457592756853499120/92603525510294281175", "339400774163819886912/92603525510294281175"), none},
  };
}

}  // namespace modcurve::ref
