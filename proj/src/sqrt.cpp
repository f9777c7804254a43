#include "modcurve/sqrt.hpp"

#include <mpfr.h>

#include <array>
#include <cmath>

#include "modcurve/factor.hpp"

namespace modcurve {
namespace {

// Minimal RAII holder for an MPFR value.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// The six real roots of the minimal polynomial refined by Newton iteration at `prec` bits.
std::vector<BigFloat> roots_at(mpfr_prec_t prec) {
  const auto& m = NumberFieldDesc::instance().integer_minpoly();
  std::vector<BigFloat> out;
  for (double r0 : NumberFieldDesc::instance().real_roots()) {
    BigFloat r(prec), f(prec), df(prec), tmp(prec);
    mpfr_set_d(r.get(), r0, MPFR_RNDN);
    const int iterations = 8 + static_cast<int>(std::log2(static_cast<double>(prec)));
    for (int it = 0; it < iterations; ++it) {
      mpfr_set_zero(f.get(), 1);
      mpfr_set_zero(df.get(), 1);
      for (std::size_t i = kFieldDegree + 1; i-- > 0;) {
        mpfr_mul(df.get(), df.get(), r.get(), MPFR_RNDN);
        mpfr_add(df.get(), df.get(), f.get(), MPFR_RNDN);
        mpfr_mul(f.get(), f.get(), r.get(), MPFR_RNDN);
        mpfr_add_z(f.get(), f.get(), m[i].get_mpz_t(), MPFR_RNDN);
      }
      mpfr_div(tmp.get(), f.get(), df.get(), MPFR_RNDN);
      mpfr_sub(r.get(), r.get(), tmp.get(), MPFR_RNDN);
    }
    out.push_back(r);
  }
  return out;
}

BigFloat embed(const std::array<Integer, kFieldDegree>& num, const BigFloat& root, mpfr_prec_t prec) {
  BigFloat acc(prec);
  for (std::size_t i = kFieldDegree; i-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), root.get(), MPFR_RNDN);
    mpfr_add_z(acc.get(), acc.get(), num[i].get_mpz_t(), MPFR_RNDN);
  }
  return acc;
}

// Inverse of the Vandermonde matrix V_{ij} = r_i^j by Gauss-Jordan elimination.
std::vector<std::vector<BigFloat>> vandermonde_inverse(const std::vector<BigFloat>& roots, mpfr_prec_t prec) {
  const std::size_t n = roots.size();
  std::vector<std::vector<BigFloat>> a(n, std::vector<BigFloat>(2 * n, BigFloat(prec)));
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_set_ui(a[i][0].get(), 1, MPFR_RNDN);
    for (std::size_t j = 1; j < n; ++j) mpfr_mul(a[i][j].get(), a[i][j - 1].get(), roots[i].get(), MPFR_RNDN);
    mpfr_set_ui(a[i][n + i].get(), 1, MPFR_RNDN);
  }
  BigFloat factor(prec), tmp(prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (mpfr_cmpabs(a[r][col].get(), a[piv][col].get()) > 0) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      mpfr_div(factor.get(), a[r][col].get(), a[col][col].get(), MPFR_RNDN);
      for (std::size_t c = col; c < 2 * n; ++c) {
        mpfr_mul(tmp.get(), factor.get(), a[col][c].get(), MPFR_RNDN);
        mpfr_sub(a[r][c].get(), a[r][c].get(), tmp.get(), MPFR_RNDN);
      }
    }
  }
  std::vector<std::vector<BigFloat>> inv(n, std::vector<BigFloat>(n, BigFloat(prec)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpfr_div(inv[i][j].get(), a[i][n + j].get(), a[i][i].get(), MPFR_RNDN);
  }
  return inv;
}

// Residue fields above small unramified primes, cached once.
const std::vector<std::shared_ptr<const FiniteField>>& disproof_fields() {
  static const std::vector<std::shared_ptr<const FiniteField>> fields = [] {
    std::vector<std::shared_ptr<const FiniteField>> out;
    for (std::uint64_t p = 3; p < 200; p += 2) {
      if (!is_probable_prime(Integer(static_cast<unsigned long>(p))) || p == 13) continue;
      for (auto& f : residue_fields_above(p)) out.push_back(f);
    }
    return out;
  }();
  return fields;
}

enum class Attempt { kFound, kNegative, kInconclusive };

Attempt try_reconstruct(const std::array<Integer, kFieldDegree>& num, mpfr_prec_t prec,
                        std::array<Integer, kFieldDegree>& root_out) {
  const auto roots = roots_at(prec);
  std::vector<BigFloat> values;
  // |value| below 2^(-prec/2) * sum |n_i| 2^i is numerically indistinguishable from zero.
  BigFloat tolerance(prec);
  {
    Integer scale = 0;
    for (std::size_t i = 0; i < kFieldDegree; ++i) scale += abs(num[i]) << static_cast<mp_bitcnt_t>(i);
    mpfr_set_z(tolerance.get(), scale.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_2si(tolerance.get(), tolerance.get(), -static_cast<long>(prec / 2), MPFR_RNDN);
  }
  bool inconclusive_sign = false;
  for (const auto& r : roots) {
    BigFloat v = embed(num, r, prec);
    if (mpfr_cmpabs(v.get(), tolerance.get()) < 0) {
      inconclusive_sign = true;
    } else if (mpfr_sgn(v.get()) < 0) {
      return Attempt::kNegative;
    }
    mpfr_abs(v.get(), v.get(), MPFR_RNDN);
    mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
    values.push_back(v);
  }
  if (inconclusive_sign) return Attempt::kInconclusive;

  const auto vinv = vandermonde_inverse(roots, prec);
  const std::size_t n = roots.size();
  BigFloat acc(prec), tmp(prec), frac(prec), quarter(prec);
  mpfr_set_d(quarter.get(), 0.25, MPFR_RNDN);
  // Overall sign is irrelevant: fix the sign on the first embedding.
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::array<Integer, kFieldDegree> cand{};
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      mpfr_set_zero(acc.get(), 1);
      for (std::size_t i = 0; i < n; ++i) {
        mpfr_mul(tmp.get(), vinv[j][i].get(), values[i].get(), MPFR_RNDN);
        const bool negate = i > 0 && ((mask >> (i - 1)) & 1U);
        if (negate) {
          mpfr_sub(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
        } else {
          mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
        }
      }
      mpfr_round(tmp.get(), acc.get());
      mpfr_sub(frac.get(), acc.get(), tmp.get(), MPFR_RNDN);
      if (mpfr_cmpabs(frac.get(), quarter.get()) > 0) {
        ok = false;
        break;
      }
      mpfr_get_z(cand[j].get_mpz_t(), tmp.get(), MPFR_RNDN);
    }
    if (!ok) continue;
    const NFElement t = NFElement::from_integers(cand, 1);
    const NFElement target = NFElement::from_integers(num, 1);
    if (t * t == target) {
      root_out = cand;
      return Attempt::kFound;
    }
  }
  return Attempt::kInconclusive;
}

}  // namespace

FqElement residue_reduce(const NFElement& x, const std::shared_ptr<const FiniteField>& residue_field) {
  const std::uint64_t p = residue_field->characteristic();
  const Integer pz(static_cast<unsigned long>(p));
  if (mpz_divisible_p(x.denominator().get_mpz_t(), pz.get_mpz_t())) {
    throw NotPIntegral("element " + x.to_string() + " is not integral at " + std::to_string(p));
  }
  std::vector<Fp> cs;
  for (std::size_t i = 0; i < kFieldDegree; ++i) cs.push_back(Fp::from_rational(p, Rational(x.numerator(i))));
  const FqElement n = residue_field->from_poly(UniPoly<Fp>(std::move(cs), Fp(p, 0)));
  return n / residue_field->from_prime(Fp::from_rational(p, Rational(x.denominator())));
}

std::vector<std::shared_ptr<const FiniteField>> residue_fields_above(std::uint64_t p, std::uint64_t seed) {
  std::vector<std::shared_ptr<const FiniteField>> out;
  for (const auto& fp : factor_mod_p(NumberFieldDesc::instance().minimal_polynomial(), p, seed)) {
    if (fp.multiplicity != 1) throw BadReduction("prime " + std::to_string(p) + " ramifies in K");
    out.push_back(FiniteField::create(p, fp.factor));
  }
  return out;
}

std::vector<double> real_embeddings(const NFElement& x) {
  std::vector<double> out;
  for (double r : NumberFieldDesc::instance().real_roots()) out.push_back(x.approx(r));
  return out;
}

std::optional<Rational> sqrt_in_field(const Rational& s, const SqrtOptions&) {
  Rational r;
  if (rational_sqrt(s, r)) return r;
  return std::nullopt;
}

std::optional<Fp> sqrt_in_field(const Fp& s, const SqrtOptions&) { return s.sqrt(); }

std::optional<FqElement> sqrt_in_field(const FqElement& s, const SqrtOptions&) { return s.sqrt(); }

std::optional<NFElement> sqrt_in_field(const NFElement& s, const SqrtOptions& opts) {
  if (s.is_zero()) return s;
  // sqrt(N/d) = sqrt(N*d)/d with N*d in Z[a] = O_K, so the root of N*d has integer coordinates.
  std::array<Integer, kFieldDegree> num = s.numerators();
  for (auto& n : num) n *= s.denominator();
  const NFElement integral = NFElement::from_integers(num, 1);

  for (const auto& field : disproof_fields()) {
    const FqElement r = residue_reduce(integral, field);
    if (!r.is_zero() && !r.is_square()) return std::nullopt;
  }
  for (unsigned prec = opts.precision_bits; prec <= opts.max_precision_bits; prec *= 2) {
    std::array<Integer, kFieldDegree> root{};
    switch (try_reconstruct(num, static_cast<mpfr_prec_t>(prec), root)) {
      case Attempt::kFound:
        return NFElement::from_integers(root, s.denominator());
      case Attempt::kNegative:
        return std::nullopt;
      case Attempt::kInconclusive:
        break;
    }
  }
  throw PrecisionExhausted("square root reconstruction in K inconclusive for " + s.to_string());
}

RationalQuadField make_quadratic_field(const Rational& s) {
  if (s.is_zero()) throw Error("radicand must be nonzero");
  // s = n/d = (n*d)/d^2
  const auto [sf, root] = squarefree_decomposition(s.num() * s.den());
  if (sf == 1) throw Error("radicand " + s.to_string() + " is a rational square");
  auto field = std::make_shared<const QuadField<Rational>>(Rational(sf), QuadField<Rational>::Unchecked{});
  return {field, Rational(root, s.den())};
}

QuadFieldPtr<NFElement> make_quadratic_field(const NFElement& s, const SqrtOptions& opts) {
  if (s.is_zero()) throw Error("radicand must be nonzero");
  if (sqrt_in_field(s, opts)) throw Error("radicand " + s.to_string() + " is a square in K");
  return std::make_shared<const QuadField<NFElement>>(s, QuadField<NFElement>::Unchecked{});
}

}  // namespace modcurve
