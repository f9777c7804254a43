#include "modcurve/factor.hpp"

#include <algorithm>
#include <random>

namespace modcurve {
namespace {

UniPoly<Fp> x_poly(std::uint64_t p) { return UniPoly<Fp>::x(Fp(p, 0)); }

// x^(p^k) mod g
UniPoly<Fp> frobenius_power(const UniPoly<Fp>& g, unsigned k) {
  const std::uint64_t p = g.lc().modulus();
  UniPoly<Fp> h = x_poly(p) % g;
  const Integer pz(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < k; ++i) h = powmod(h, pz, g);
  return h;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool poly_less(const UniPoly<Fp>& a, const UniPoly<Fp>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeff(i).value() != b.coeff(i).value()) return a.coeff(i).value() < b.coeff(i).value();
  }
  return false;
}

// p-th root of a polynomial whose derivative vanishes (coefficients only at multiples of p).
UniPoly<Fp> pth_root(const UniPoly<Fp>& g) {
  const std::uint64_t p = g.lc().modulus();
  std::vector<Fp> out;
  for (std::size_t i = 0; i < g.size(); i += p) out.push_back(g.coeff(i));  // a^p = a in F_p
  return UniPoly<Fp>(std::move(out), Fp(p, 0));
}

}  // namespace

UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& g, std::uint64_t p) {
  std::vector<Fp> out;
  out.reserve(g.size());
  for (const auto& c : g.coeffs()) out.push_back(Fp::from_rational(p, c));
  return UniPoly<Fp>(std::move(out), Fp(p, 0));
}

bool is_irreducible(const UniPoly<Fp>& g) {
  const int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const UniPoly<Fp> m = g.monic();
  const std::uint64_t p = m.lc().modulus();
  const UniPoly<Fp> x = x_poly(p);
  if (frobenius_power(m, static_cast<unsigned>(n)) != x % m) return false;
  for (unsigned q : prime_divisors(static_cast<unsigned>(n))) {
    const UniPoly<Fp> h = frobenius_power(m, static_cast<unsigned>(n) / q) - x;
    if (gcd(m, h).degree() != 0) return false;
  }
  return true;
}

std::vector<FactorPower> squarefree_decomposition(const UniPoly<Fp>& input) {
  std::vector<FactorPower> out;
  if (input.degree() < 1) return out;
  const UniPoly<Fp> g = input.monic();
  const std::uint64_t p = g.lc().modulus();
  const UniPoly<Fp> dg = g.derivative();
  if (dg.is_zero()) {
    for (auto& [f, m] : squarefree_decomposition(pth_root(g))) out.push_back({f, m * static_cast<unsigned>(p)});
    return out;
  }
  UniPoly<Fp> c = gcd(g, dg);
  UniPoly<Fp> w = g.exact_div(c);
  unsigned i = 1;
  while (w.degree() > 0) {
    const UniPoly<Fp> y = gcd(w, c);
    const UniPoly<Fp> z = w.exact_div(y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = c.exact_div(y);
  }
  if (c.degree() > 0) {
    for (auto& [f, m] : squarefree_decomposition(pth_root(c))) out.push_back({f, m * static_cast<unsigned>(p)});
  }
  return out;
}

std::vector<std::pair<UniPoly<Fp>, unsigned>> distinct_degree_factorization(const UniPoly<Fp>& input) {
  std::vector<std::pair<UniPoly<Fp>, unsigned>> out;
  UniPoly<Fp> g = input.monic();
  const std::uint64_t p = g.lc().modulus();
  const UniPoly<Fp> x = x_poly(p);
  const Integer pz(static_cast<unsigned long>(p));
  UniPoly<Fp> h = x % g;
  unsigned d = 0;
  while (g.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, pz, g);
    const UniPoly<Fp> common = gcd(g, h - x);
    if (common.degree() > 0) {
      out.emplace_back(common, d);
      g = g.exact_div(common);
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

std::vector<UniPoly<Fp>> equal_degree_factorization(const UniPoly<Fp>& input, unsigned d, std::uint64_t seed) {
  const UniPoly<Fp> g = input.monic();
  const int n = g.degree();
  if (n <= static_cast<int>(d)) return {g};
  const std::uint64_t p = g.lc().modulus();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);

  Integer qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p, d);
  while (true) {
    std::vector<Fp> cs;
    for (int i = 0; i < n; ++i) cs.emplace_back(p, static_cast<std::int64_t>(coeff(rng)));
    const UniPoly<Fp> a(std::move(cs), Fp(p, 0));
    if (a.degree() < 1) continue;
    UniPoly<Fp> b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) splits in characteristic 2.
      UniPoly<Fp> t = a % g;
      UniPoly<Fp> acc = t;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % g;
        acc += t;
      }
      b = acc;
    } else {
      b = powmod(a, (qd - 1) / 2, g) - UniPoly<Fp>::constant(Fp(p, 1));
    }
    const UniPoly<Fp> h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < n) {
      std::vector<UniPoly<Fp>> left = equal_degree_factorization(h, d, rng());
      std::vector<UniPoly<Fp>> right = equal_degree_factorization(g.exact_div(h), d, rng());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<FactorPower> factor_fp(const UniPoly<Fp>& g, std::uint64_t seed) {
  std::vector<FactorPower> out;
  std::uint64_t sub_seed = seed;
  for (const auto& [sqf, mult] : squarefree_decomposition(g)) {
    for (const auto& [part, d] : distinct_degree_factorization(sqf)) {
      for (auto& f : equal_degree_factorization(part, d, sub_seed++)) out.push_back({f, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return poly_less(a.factor, b.factor);
  });
  // An irreducible of multiplicity p*k + r shows up once with r and once with p*k.
  std::vector<FactorPower> merged;
  for (auto& fp : out) {
    if (!merged.empty() && merged.back().factor == fp.factor) {
      merged.back().multiplicity += fp.multiplicity;
    } else {
      merged.push_back(std::move(fp));
    }
  }
  return merged;
}

std::vector<FactorPower> factor_mod_p(const UniPoly<Rational>& g, std::uint64_t p, std::uint64_t seed) {
  if (g.degree() < 1) throw DegreeError("factor_mod_p needs degree >= 1");
  const UniPoly<Fp> reduced = reduce_mod_p(g, p);
  if (reduced.degree() < 1) throw DegreeError("polynomial degenerates to a constant modulo p");
  return factor_fp(reduced, seed);
}

}  // namespace modcurve
