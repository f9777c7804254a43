#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "modcurve/bielliptic.hpp"
#include "modcurve/factor.hpp"
#include "modcurve/genus2.hpp"
#include "modcurve/pipelines.hpp"
#include "modcurve/sqrt.hpp"

namespace modcurve {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "?";
}

bool SuiteConfig::selected(const std::string& id) const {
  if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) return false;
  return std::find(skip.begin(), skip.end(), id) == skip.end();
}

const std::vector<std::string>& x13_check_ids() {
  static const std::vector<std::string> ids{
      "x13.cusps",    "x13.involution", "x13.d_pair",  "x13.even_model", "x13.eprime_coeffs", "x13.psi19",
      "x13.order19",  "x13.split3",     "x13.split5",  "x13.jac_f27",    "x13.jac_f25",       "x13.closure",
      "x13.exponent", "x13.deg_lt2",    "x13.reduce3", "x13.reduce5",    "x13.pullback",      "x13.discriminant"};
  return ids;
}

const std::vector<std::string>& x37_check_ids() {
  static const std::vector<std::string> ids{"x37.working_model", "x37.map_identity", "x37.even_model",
                                            "x37.nontorsion",    "x37.table_points", "x37.table_curves"};
  return ids;
}

namespace {

struct Outcome {
  bool ok;
  std::string actual;
  bool skipped = false;
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  void check(const std::string& id, const std::string& expected, const std::function<Outcome()>& body) {
    CheckResult r{id, CheckStatus::Skip, expected, "", 0.0};
    if (!cfg_.selected(id)) {
      r.actual = "not selected";
      out_.push_back(r);
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      r.actual = o.actual;
      r.status = o.skipped ? CheckStatus::Skip : (o.ok ? CheckStatus::Pass : CheckStatus::Fail);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.actual = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  const SuiteConfig& cfg_;
  std::vector<CheckResult> out_;
};

Outcome equal(const std::string& expected, const std::string& actual) { return {expected == actual, actual}; }

template <class E>
std::string set_string(const E& a, const E& b) {
  std::set<std::string> s{a.to_string(), b.to_string()};
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

template <class E>
std::string even_string(const EvenCoefficients<E>& c) {
  return "c6 = " + c.c6.to_string() + "; c4 = " + c.c4.to_string() + "; c2 = " + c.c2.to_string() +
         "; c0 = " + c.c0.to_string();
}

std::string degree_string(const std::vector<FactorPower>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ",";
    out += std::to_string(f.factor.degree());
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

// Prime factors with exponents by trial division.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string support_string(const std::vector<std::pair<Integer, unsigned>>& fs) {
  std::string out = "{";
  for (const auto& [p, e] : fs) out += (out.size() > 1 ? ", " : "") + p.get_str();
  return out + "}";
}

std::string factored_string(const Integer& n, const std::vector<std::pair<Integer, unsigned>>& fs) {
  std::string out = n < 0 ? "-" : "";
  bool first = true;
  for (const auto& [p, e] : fs) {
    out += (first ? "" : "*") + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  return out;
}

class X13Context {
 public:
  explicit X13Context(const SuiteConfig& cfg)
      : cfg_(cfg),
        f_rational_(cfg.x13_f ? *cfg.x13_f : ref::x13_f_rational()),
        curve_(f_rational_.map([](const Rational& r) { return NFElement(r); })) {
    opts_.precision_bits = cfg.precision_bits;
  }

  const UniPoly<Rational>& f_rational() const { return f_rational_; }
  const HyperCurve<NFElement>& curve() const { return curve_; }
  const SqrtOptions& opts() const { return opts_; }

  const EvenModelData<NFElement>& emd() {
    if (!emd_) emd_ = build_even_model(curve_, ref::x13_involution());
    return *emd_;
  }
  const MonicScaling<NFElement>& eprime() {
    if (!eprime_) eprime_ = emd().monic();
    return *eprime_;
  }
  const JacobianGroup<NFElement>& jac() {
    if (!jac_) jac_.emplace(curve_);
    return *jac_;
  }
  const std::vector<MumfordClass<NFElement>>& group() {
    if (!group_) {
      std::vector<MumfordClass<NFElement>> gens;
      for (const auto& c : ref::x13_cusps()) gens.push_back(jac().abel_jacobi(c.point));
      group_ = subgroup_closure(jac(), gens);
    }
    return *group_;
  }

 private:
  const SuiteConfig& cfg_;
  UniPoly<Rational> f_rational_;
  HyperCurve<NFElement> curve_;
  SqrtOptions opts_;
  std::optional<EvenModelData<NFElement>> emd_;
  std::optional<MonicScaling<NFElement>> eprime_;
  std::optional<JacobianGroup<NFElement>> jac_;
  std::optional<std::vector<MumfordClass<NFElement>>> group_;
};

Outcome cusp_membership(const X13Context& ctx) {
  const auto cusps = ref::x13_cusps();
  const auto f = ctx.curve().f();
  std::size_t on = 0;
  std::string miss;
  for (const auto& c : cusps) {
    if (on_curve(ctx.curve(), c.point)) {
      ++on;
    } else if (miss.empty()) {
      const auto& p = c.point;
      miss = p.is_affine() ? "; first miss " + c.label + ": y^2 = " + (p.y * p.y).to_string() +
                                 ", f(x) = " + f.eval(p.x).to_string()
                           : "; first miss " + c.label + ": lc(f) = " + f.lc().to_string();
    }
  }
  const std::string count = std::to_string(on) + " of " + std::to_string(cusps.size()) + " on the curve";
  return {on == cusps.size() && cusps.size() == 12, count + miss};
}

Outcome reduction_injective(X13Context& ctx, std::uint64_t p, std::uint64_t seed) {
  const auto field = residue_fields_above(p, seed).front();
  std::set<std::string> images;
  for (const auto& d : ctx.group()) images.insert(reduce_class(ctx.curve(), d, field).to_string());
  const std::string actual = std::to_string(images.size()) + " distinct images of " +
                             std::to_string(ctx.group().size()) + " classes";
  return {images.size() == 361 && ctx.group().size() == 361, actual};
}

Outcome pullback_census(X13Context& ctx) {
  const auto& e = ctx.emd();
  const auto& s = ctx.eprime();
  const auto lifts = lift_x(s.curve, ref::x13_xP(), ctx.opts());
  if (lifts.empty()) return {false, "x_P does not lift to E'(K)"};
  const auto cusps = ref::x13_cusps();
  std::size_t total = 0, cusp = 0, quad = 0, other = 0;
  std::set<std::string> distinct;
  ECPoint<NFElement> q = ECPoint<NFElement>::at_infinity();
  for (int k = 0; k < 19; ++k, q = ec_add(s.curve, q, lifts[0])) {
    for (const auto& fp : pullback_fiber(e, s.inverse(q), ctx.opts())) {
      total += static_cast<std::size_t>(fp.multiplicity);
      distinct.insert(fp.to_string());
      if (fp.base) {
        bool is_cusp = false;
        for (const auto& c : cusps) is_cusp = is_cusp || c.point == *fp.base;
        (is_cusp ? cusp : other) += 1;
      } else {
        const auto& p = *fp.quad;
        (p.is_affine() && p.x.in_base() && p.y.in_base() ? other : quad) += 1;
      }
    }
  }
  std::ostringstream os;
  os << total << " points (" << distinct.size() << " distinct): " << cusp << " cusps, " << quad << " quadratic";
  if (other) os << ", " << other << " other";
  return equal("38 points (38 distinct): 12 cusps, 26 quadratic", os.str());
}

// Bivariate polynomial: coefficient of y^j at index j.
using BiPoly = std::vector<UniPoly<Rational>>;

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.size() + b.size() - 1, UniPoly<Rational>(Rational()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

BiPoly bi_add(BiPoly a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), UniPoly<Rational>(Rational()));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] += b[j];
  return a;
}

// Remainder modulo y^2 - h1(x) y - h0(x).
BiPoly bi_reduce(BiPoly a, const UniPoly<Rational>& h1, const UniPoly<Rational>& h0) {
  for (std::size_t j = a.size(); j-- > 2;) {
    const auto c = a[j];
    a[j] = UniPoly<Rational>(Rational());
    a[j - 1] += c * h1;
    a[j - 2] += c * h0;
  }
  a.resize(2, UniPoly<Rational>(Rational()));
  return a;
}

}  // namespace

std::vector<CheckResult> run_x1_13(const SuiteConfig& cfg) {
  Runner run(cfg);
  X13Context ctx(cfg);
  const std::uint64_t seed = cfg.rng_seed;

  run.check("x13.cusps", "12 of 12 on the curve", [&] { return cusp_membership(ctx); });

  run.check("x13.involution", "involution preserving the branch locus", [&] {
    const auto& m = ref::x13_involution();
    if (!moebius_is_involution(m)) return Outcome{false, "not an involution"};
    const auto f = ctx.curve().f();
    const auto lambda = proportionality_factor(moebius_transform_sextic(f, m), f);
    if (!lambda) return Outcome{false, "f(Mx)(cx - 1)^6 is not proportional to f"};
    return Outcome{true, "involution preserving the branch locus (lambda = " + lambda->to_string() + ")"};
  });

  run.check("x13.d_pair", set_string(ref::x13_d1_reference(), ref::x13_d2_reference()), [&] {
    const auto [d1, d2] = solve_d_pair(ref::x13_b(), ref::x13_c());
    return equal(set_string(ref::x13_d1_reference(), ref::x13_d2_reference()), set_string(d1, d2));
  });

  run.check("x13.even_model", even_string(ref::x13_even_reference()),
            [&] { return equal(even_string(ref::x13_even_reference()), even_string(ctx.emd().coeffs)); });

  const auto eprime_expected = "b = " + ref::x13_eprime_b().to_string() + "; c = " + ref::x13_eprime_c().to_string() +
                               "; d = " + ref::x13_eprime_d().to_string();
  run.check("x13.eprime_coeffs", eprime_expected, [&] {
    const auto& c = ctx.eprime().curve;
    return equal(eprime_expected,
                 "b = " + c.a2.to_string() + "; c = " + c.a4.to_string() + "; d = " + c.a6.to_string());
  });

  run.check("x13.psi19", "0", [&] {
    return equal("0", division_polynomial_value(ctx.eprime().curve, 19, ref::x13_xP()).to_string());
  });

  run.check("x13.order19", "19", [&] {
    const auto lifts = lift_x(ctx.eprime().curve, ref::x13_xP(), ctx.opts());
    if (lifts.empty()) return Outcome{false, "x_P does not lift to E'(K)"};
    const auto n = point_order(ctx.eprime().curve, lifts[0], 100);
    return equal("19", n ? std::to_string(*n) : "infinite or > 100");
  });

  const auto& minpoly = NumberFieldDesc::instance().minimal_polynomial();
  run.check("x13.split3", "3,3", [&] { return equal("3,3", degree_string(factor_mod_p(minpoly, 3, seed))); });
  run.check("x13.split5", "2,2,2", [&] { return equal("2,2,2", degree_string(factor_mod_p(minpoly, 5, seed))); });

  run.check("x13.jac_f27", "1444", [&] {
    return equal("1444", jacobian_order(reduce_curve_mod_p(ctx.f_rational(), 3), 3).get_str());
  });
  run.check("x13.jac_f25", "361", [&] {
    return equal("361", jacobian_order(reduce_curve_mod_p(ctx.f_rational(), 5), 2).get_str());
  });

  run.check("x13.closure", "361", [&] { return equal("361", std::to_string(ctx.group().size())); });

  run.check("x13.exponent", "every nonidentity class has order 19", [&] {
    const auto& jac = ctx.jac();
    const auto id = jac.identity();
    for (const auto& d : ctx.group()) {
      if (d == id) continue;
      if (!(jac.scalar_mul(19, d) == id)) return Outcome{false, "19 * " + d.to_string() + " is not zero"};
    }
    return Outcome{true, "every nonidentity class has order 19"};
  });

  run.check("x13.deg_lt2", "23", [&] { return equal("23", std::to_string(count_deg_lt2(ctx.group()))); });

  run.check("x13.reduce3", "361 distinct images of 361 classes",
            [&] { return reduction_injective(ctx, 3, seed); });
  run.check("x13.reduce5", "361 distinct images of 361 classes",
            [&] { return reduction_injective(ctx, 5, seed); });

  run.check("x13.pullback", "38 points (38 distinct): 12 cusps, 26 quadratic", [&] { return pullback_census(ctx); });

  run.check("x13.discriminant", "{2, 13}", [&] {
    const Rational d = discriminant(ctx.f_rational());
    if (!d.is_integer()) return Outcome{false, "non-integral discriminant " + d.to_string()};
    const auto fs = factor_integer(d.num());
    const auto ref_fs = factor_integer(ref::x13_discriminant_reference());
    const std::string support = support_string(fs);
    const std::string note = " (disc = " + factored_string(d.num(), fs) + ", reference " +
                             factored_string(ref::x13_discriminant_reference(), ref_fs) + ")";
    return Outcome{support == "{2, 13}", support + note};
  });

  return run.take();
}

std::vector<CheckResult> run_x0_37(const SuiteConfig& cfg) {
  Runner run(cfg);
  const UniPoly<Rational> g = cfg.x37_g ? *cfg.x37_g : ref::x37_g();
  const UniPoly<Rational> x = rational_poly({0, 1});

  run.check("x37.working_model", ref::x37_f().to_string(), [&] {
    const auto f = g + x * x * x * x * x * x * UniPoly<Rational>::constant(Rational(1, 4));
    return equal(ref::x37_f().to_string(), f.to_string());
  });

  run.check("x37.map_identity", "0", [&] {
    // x^6 (Y^2 + Y - X^3 + X) with X = P/x^2, P = -x^2 + x - 1, and Y = (y - x^3)/x^3.
    const auto P = rational_poly({-1, 1, -1});
    const auto x3 = x * x * x;
    const BiPoly Yn{-x3, rational_poly({1})};
    const BiPoly X3n{P * P * P};
    const BiPoly Xn{P * x3 * x};
    BiPoly n = bi_add(bi_mul(Yn, Yn), bi_mul(Yn, BiPoly{x3}));
    n = bi_add(n, BiPoly{-X3n[0]});
    n = bi_add(n, Xn);
    const auto r = bi_reduce(n, x3, g);
    if (r[0].is_zero() && r[1].is_zero()) return Outcome{true, "0"};
    return Outcome{false, "(" + r[1].to_string() + ") y + (" + r[0].to_string() + ")"};
  });

  run.check("x37.even_model", even_string(ref::x37_even_reference()), [&] {
    const auto e = build_even_model(HyperCurve<Rational>(g, ref::x37_h()), ref::x37_involution());
    return equal(even_string(ref::x37_even_reference()), even_string(e.coeffs));
  });

  run.check("x37.nontorsion", "nG != O for 1 <= n <= 12", [&] {
    const auto E = ref::e37();
    const auto G = ref::e37_generator();
    auto P = G;
    for (int n = 1; n <= 12; ++n, P = ec_add(E, P, G)) {
      if (P.infinity) return Outcome{false, std::to_string(n) + "G = O"};
    }
    return Outcome{true, "nG != O for 1 <= n <= 12"};
  });

  std::optional<std::vector<QuadPointRecord>> records;
  auto table = [&]() -> const std::vector<QuadPointRecord>& {
    if (!records) records = generate_table(cfg.max_k, cfg.jmap ? &*cfg.jmap : nullptr);
    return *records;
  };

  const auto rows = ref::reference_table();
  const std::string points_expected =
      std::to_string(rows.size()) + " of " + std::to_string(rows.size()) + " rows matched; k = 3 skipped; records consistent";
  run.check("x37.table_points", points_expected, [&] {
    const auto& recs = table();
    const HyperCurve<Rational> model(g, ref::x37_h());
    std::string bad;
    for (const auto& r : recs) {
      const auto pt = CurvePoint<QuadQ>::affine(r.x, r.y);
      if (!on_curve(model, pt)) {
        bad = "k = " + std::to_string(r.k) + " is off the model";
        break;
      }
      for (const QuadQ& xx : {r.x, r.x.conj()}) {
        const QuadQ yy = xx == r.x ? r.y : r.y.conj();
        const QuadQ X = (-(xx * xx) + xx - xx.one()) / (xx * xx);
        const QuadQ Y = (yy - xx * xx * xx) / (xx * xx * xx);
        if (!(X == xx.embed(r.u) && Y == xx.embed(r.v))) bad = "k = " + std::to_string(r.k) + " does not map to kG";
      }
    }
    const auto matches = match_table(recs, rows);
    std::size_t matched = 0;
    std::string ks;
    for (const auto& m : matches) {
      if (m.k) ++matched;
      ks += (ks.empty() ? "" : ", ") + std::string("D = ") + std::to_string(rows[m.row].D) + ": k = " +
            (m.k ? std::to_string(*m.k) : "none");
    }
    const bool k3_skipped =
        cfg.max_k >= 3 && std::none_of(recs.begin(), recs.end(), [](const QuadPointRecord& r) { return r.k == 3; });
    std::string actual = std::to_string(matched) + " of " + std::to_string(rows.size()) + " rows matched; " +
                         (k3_skipped ? "k = 3 skipped" : "k = 3 not skipped") + "; " +
                         (bad.empty() ? "records consistent" : bad);
    const bool ok = actual == points_expected;
    return Outcome{ok, actual + " [" + ks + "]"};
  });

  const std::string curves_expected = "j(P) matches for " + std::to_string(rows.size()) + " of " +
                                      std::to_string(rows.size()) + " rows";
  run.check("x37.table_curves", curves_expected, [&] {
    if (!cfg.jmap) return Outcome{false, "no j-map data supplied", true};
    try {
      validate_jmap(*cfg.jmap, rows);
    } catch (const ValidationFailed& e) {
      return Outcome{false, e.what()};
    }
    return Outcome{true, curves_expected};
  });

  return run.take();
}

nlohmann::json report_json(const std::string& suite, std::uint64_t rng_seed, const std::vector<CheckResult>& checks) {
  nlohmann::json out;
  out["suite"] = suite;
  out["rng_seed"] = rng_seed;
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"check_id", c.check_id},
                   {"status", to_string(c.status)},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"seconds", c.seconds}});
  }
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace modcurve
