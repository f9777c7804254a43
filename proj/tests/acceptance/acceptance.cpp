// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "modcurve/ellcurve.hpp"
#include "modcurve/genus2.hpp"
#include "modcurve/pipelines.hpp"
#include "modcurve/reference_data.hpp"
#include "support/divisor_oracle.hpp"

using namespace modcurve;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Line {
  Verdict verdict;
  std::string detail;
};

std::map<std::string, CheckResult> by_id(const std::vector<CheckResult>& rs) {
  std::map<std::string, CheckResult> out;
  for (const auto& r : rs) out[r.check_id] = r;
  return out;
}

// Combine suite checks, with an optional time limit on their total.
Line from_checks(const std::map<std::string, CheckResult>& rs, const std::vector<std::string>& ids,
                 double limit = 0) {
  double seconds = 0;
  bool skip = false;
  std::string detail;
  for (const auto& id : ids) {
    const auto& r = rs.at(id);
    seconds += r.seconds;
    if (r.status == CheckStatus::Skip) skip = true;
    if (r.status == CheckStatus::Fail) return {Verdict::Fail, id + ": expected " + r.expected + ", got " + r.actual};
    if (!detail.empty()) detail += "; ";
    detail += r.actual;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " [%.3f s]", seconds);
  if (skip) return {Verdict::Skip, detail};
  if (limit > 0 && seconds >= limit) {
    return {Verdict::Fail, "took " + std::string(buf) + ", limit " + std::to_string(limit) + " s"};
  }
  return {Verdict::Pass, detail + buf};
}

Line oracle_equivalence() {
  // Jacobian law against divisor classes of the reduction mod 3.
  const oracle::DivisorOracle orc(3, {1, 2, 1, 2, 0, 1, 1});
  const JacobianGroup<FqElement> jac(HyperCurve<FqElement>(orc.f()));
  const auto classes = orc.classes();
  std::size_t pairs = 0;
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      ++pairs;
      if (!(jac.add(orc.mumford(a), orc.mumford(b)) == orc.mumford(orc.add(a, b)))) {
        return {Verdict::Fail, "jac_add disagrees on a pair of classes"};
      }
    }
  }
  // Division polynomials against brute-force torsion over F_{p^2}.
  const std::vector<std::uint64_t> primes{11, 13, 17, 19, 23};
  std::mt19937_64 rng(20240615);
  std::size_t curves = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const auto f2 = FiniteField::extension(p, 2);
    std::optional<WeierstrassCurve<Fp>> cur;
    while (!cur) {
      try {
        cur.emplace(WeierstrassCurve<Fp>::short_form(Fp(p, 0), Fp(p, rng() % p), Fp(p, rng() % p)));
      } catch (const Error&) {
      }
    }
    const WeierstrassCurve<FqElement> big(f2->zero(), f2->zero(), f2->zero(), f2->from_prime(cur->a4),
                                          f2->from_prime(cur->a6));
    for (long n : {3L, 5L, 7L}) {
      const auto psi = division_polynomial(*cur, n);
      std::set<std::uint64_t> roots, torsion;
      for (std::uint64_t x = 0; x < p; ++x) {
        if (psi.eval(Fp(p, x)).is_zero()) roots.insert(x);
        const FqElement X = f2->from_int(static_cast<long>(x));
        for (std::uint64_t i = 0; i < f2->size(); ++i) {
          const auto pt = ECPoint<FqElement>::affine(X, f2->element(i));
          if (on_curve(big, pt) && ec_scalar_mul(big, n, pt).infinity) torsion.insert(x);
        }
      }
      if (roots != torsion) {
        return {Verdict::Fail, "psi_" + std::to_string(n) + " roots differ from brute force over F_" + std::to_string(p)};
      }
    }
    ++curves;
  }
  return {Verdict::Pass, std::to_string(classes.size()) + " classes, " + std::to_string(pairs) +
                             " pairs agree; psi_3, psi_5, psi_7 agree on " + std::to_string(curves) + " curves"};
}

}  // namespace

int main() {
  const SuiteConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const auto x13 = by_id(run_x1_13(cfg));
  const auto x37 = by_id(run_x0_37(cfg));

  const std::vector<std::pair<std::string, std::function<Line()>>> criteria{
      {"cusp membership", [&] { return from_checks(x13, {"x13.cusps"}, 1.0); }},
      {"even model of X1(13)", [&] { return from_checks(x13, {"x13.d_pair", "x13.even_model"}); }},
      {"even model of X0(37)", [&] { return from_checks(x37, {"x37.even_model"}); }},
      {"E' structure", [&] { return from_checks(x13, {"x13.eprime_coeffs", "x13.psi19", "x13.order19"}, 60.0); }},
      {"prime splitting", [&] { return from_checks(x13, {"x13.split3", "x13.split5"}); }},
      {"Jacobian orders", [&] { return from_checks(x13, {"x13.jac_f27", "x13.jac_f25"}, 10.0); }},
      {"cuspidal subgroup", [&] { return from_checks(x13, {"x13.closure", "x13.exponent", "x13.deg_lt2"}, 60.0); }},
      {"reduction injectivity", [&] { return from_checks(x13, {"x13.reduce3", "x13.reduce5"}); }},
      {"pullback census", [&] { return from_checks(x13, {"x13.pullback"}); }},
      {"discriminant support", [&] { return from_checks(x13, {"x13.discriminant"}); }},
      {"X0(37) map identity", [&] { return from_checks(x37, {"x37.working_model", "x37.map_identity"}); }},
      {"non-torsion generator", [&] { return from_checks(x37, {"x37.nontorsion"}); }},
      {"reference table points", [&] { return from_checks(x37, {"x37.table_points"}, 5.0); }},
      {"reference table curves", [&] { return from_checks(x37, {"x37.table_curves"}); }},
      {"oracle equivalence", oracle_equivalence},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    try {
      line = criteria[i].second();
    } catch (const std::exception& e) {
      line = {Verdict::Fail, std::string("error: ") + e.what()};
    }
    const char* tag = line.verdict == Verdict::Pass ? "PASS" : (line.verdict == Verdict::Fail ? "FAIL" : "SKIP");
    if (line.verdict == Verdict::Fail) ++failures;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, tag, criteria[i].first.c_str(), line.detail.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("total %.2f s, %d failing\n", total, failures);
  return failures == 0 ? 0 : 1;
}
