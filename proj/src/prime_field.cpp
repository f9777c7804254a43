#include "modcurve/prime_field.hpp"

namespace modcurve {

Fp Fp::from_rational(std::uint64_t p, const Rational& r) {
  const Integer pz(static_cast<unsigned long>(p));
  Integer d = r.den();
  if (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) {
    throw NotPIntegral("denominator of " + r.to_string() + " divisible by " + std::to_string(p));
  }
  Integer n = r.num();
  mpz_mod(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  mpz_mod(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  return Fp(p, static_cast<std::int64_t>(n.get_ui())) / Fp(p, static_cast<std::int64_t>(d.get_ui()));
}

Fp Fp::inv() const {
  if (v_ == 0) throw DivisionByZero();
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 res = s0 % static_cast<__int128>(p_);
  if (res < 0) res += p_;
  Fp out;
  out.p_ = p_;
  out.v_ = static_cast<std::uint64_t>(res);
  return out;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp result = one();
  Fp base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool Fp::is_square() const {
  if (v_ == 0 || p_ == 2) return true;
  return pow((p_ - 1) / 2).v_ == 1;
}

std::optional<Fp> Fp::sqrt() const {
  if (v_ == 0 || p_ == 2) return *this;
  if (!is_square()) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  Fp z = from_int(2);
  while (z.is_square()) z += one();
  Fp c = z.pow(q);
  Fp x = pow((q + 1) / 2);
  Fp t = pow(q);
  unsigned m = s;
  while (!(t.v_ == 1)) {
    unsigned i = 0;
    Fp tt = t;
    while (!(tt.v_ == 1)) {
      tt *= tt;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

}  // namespace modcurve
