#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modcurve/errors.hpp"
#include "modcurve/rational.hpp"

namespace modcurve {

// Element of F_p for a word-sized odd or even prime p; the modulus travels with the value.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t p, std::int64_t value) : p_(p), v_(normalize(p, value)) {}

  static Fp from_rational(std::uint64_t p, const Rational& r);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  Fp zero() const { return Fp(p_, 0); }
  Fp one() const { return Fp(p_, 1); }
  Fp from_int(long n) const { return Fp(p_, n); }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;
  // Euler criterion; zero counts as a square.
  bool is_square() const;
  std::optional<Fp> sqrt() const;

  Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : static_cast<std::int64_t>(p_ - v_)); }
  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static std::uint64_t normalize(std::uint64_t p, std::int64_t value) {
    if (p == 0) return 0;
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = value % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t p_ = 0;
  std::uint64_t v_ = 0;
};

}  // namespace modcurve
