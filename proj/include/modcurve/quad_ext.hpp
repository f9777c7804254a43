#pragma once

#include <memory>
#include <string>
#include <utility>

#include "modcurve/errors.hpp"

namespace modcurve {

// The field B(sqrt(s)) for a non-square s of B. Instances are created through the
// make_quadratic_field factories (sqrt.hpp), which refuse square radicands.
template <class B>
class QuadField {
 public:
  struct Unchecked {};
  QuadField(B radicand, Unchecked) : radicand_(std::move(radicand)) {}
  const B& radicand() const { return radicand_; }

 private:
  B radicand_;
};

template <class B>
using QuadFieldPtr = std::shared_ptr<const QuadField<B>>;

// u + v*sqrt(s) in B(sqrt(s)).
template <class B>
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(QuadFieldPtr<B> field, B u, B v) : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)) {}
  static QuadExt from_base(QuadFieldPtr<B> field, const B& u) { return QuadExt(field, u, u.zero()); }
  static QuadExt sqrt_radicand(QuadFieldPtr<B> field) {
    const B& s = field->radicand();
    return QuadExt(field, s.zero(), s.one());
  }

  const QuadFieldPtr<B>& field() const { return field_; }
  const B& radicand() const { return field_->radicand(); }
  const B& u() const { return u_; }
  const B& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool in_base() const { return v_.is_zero(); }
  QuadExt zero() const { return QuadExt(field_, u_.zero(), u_.zero()); }
  QuadExt one() const { return QuadExt(field_, u_.one(), u_.zero()); }
  QuadExt from_int(long n) const { return QuadExt(field_, u_.from_int(n), u_.zero()); }
  QuadExt embed(const B& b) const { return QuadExt(field_, b, u_.zero()); }

  QuadExt conj() const { return QuadExt(field_, u_, -v_); }
  B norm() const { return u_ * u_ - radicand() * v_ * v_; }
  B trace() const { return u_ + u_; }

  QuadExt inv() const {
    const B n = norm();
    if (n.is_zero()) throw DivisionByZero();
    const B ni = n.inv();
    return QuadExt(field_, u_ * ni, -(v_ * ni));
  }

  QuadExt operator-() const { return QuadExt(field_, -u_, -v_); }
  QuadExt& operator+=(const QuadExt& o) {
    check(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    check(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    check(o);
    B nu = u_ * o.u_ + radicand() * v_ * o.v_;
    B nv = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(nu);
    v_ = std::move(nv);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.radicand() == b.radicand();
  }

  // "(u) + (v)*sqrt(s)"
  std::string to_string() const {
    return "(" + u_.to_string() + ") + (" + v_.to_string() + ")*sqrt(" + radicand().to_string() + ")";
  }

 private:
  void check(const QuadExt& o) const {
    if (field_ != o.field_ && !(field_->radicand() == o.field_->radicand())) {
      throw Error("mixing elements of different quadratic extensions");
    }
  }

  QuadFieldPtr<B> field_;
  B u_{};
  B v_{};
};

}  // namespace modcurve
