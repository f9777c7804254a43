#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "modcurve/prime_field.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

class FqElement;

// F_{p^f} = F_p[t]/(modulus). The modulus is checked for irreducibility on construction.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  struct Token {};
  FiniteField(Token, std::uint64_t p, UniPoly<Fp> modulus);

  static std::shared_ptr<const FiniteField> create(std::uint64_t p, const UniPoly<Fp>& modulus);
  // F_p itself, presented as F_p[t]/(t).
  static std::shared_ptr<const FiniteField> prime(std::uint64_t p);
  // Deterministic choice: the first monic irreducible of degree f in lexicographic order.
  static std::shared_ptr<const FiniteField> extension(std::uint64_t p, unsigned f);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
  const UniPoly<Fp>& modulus() const { return modulus_; }
  const Integer& order() const { return order_; }
  // Only valid when the field has fewer than 2^64 elements.
  std::uint64_t size() const { return order_.get_ui(); }

  FqElement zero() const;
  FqElement one() const;
  FqElement gen() const;
  FqElement from_int(long n) const;
  FqElement from_prime(const Fp& c) const;
  FqElement from_poly(const UniPoly<Fp>& r) const;
  // Enumeration of all q elements by base-p digits of the index.
  FqElement element(std::uint64_t index) const;

 private:
  std::uint64_t p_;
  UniPoly<Fp> modulus_;
  Integer order_;
};

class FqElement {
 public:
  FqElement() = default;
  FqElement(std::shared_ptr<const FiniteField> field, UniPoly<Fp> rep);

  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  const UniPoly<Fp>& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  FqElement zero() const { return field_->zero(); }
  FqElement one() const { return field_->one(); }
  FqElement from_int(long n) const { return field_->from_int(n); }

  FqElement inv() const;
  FqElement pow(const Integer& e) const;
  bool is_square() const;
  std::optional<FqElement> sqrt() const;
  // Image under x -> x^p.
  FqElement frobenius() const;

  FqElement operator-() const { return FqElement(field_, -rep_); }
  FqElement& operator+=(const FqElement& o) {
    rep_ += o.rep_;
    return *this;
  }
  FqElement& operator-=(const FqElement& o) {
    rep_ -= o.rep_;
    return *this;
  }
  FqElement& operator*=(const FqElement& o) {
    rep_ = (rep_ * o.rep_) % field_->modulus();
    return *this;
  }
  FqElement& operator/=(const FqElement& o) { return *this *= o.inv(); }

  friend FqElement operator+(FqElement a, const FqElement& b) { return a += b; }
  friend FqElement operator-(FqElement a, const FqElement& b) { return a -= b; }
  friend FqElement operator*(FqElement a, const FqElement& b) { return a *= b; }
  friend FqElement operator/(FqElement a, const FqElement& b) { return a /= b; }
  friend bool operator==(const FqElement& a, const FqElement& b) { return a.rep_ == b.rep_; }

  // Index in the enumeration used by FiniteField::element.
  std::uint64_t index() const;
  std::string to_string() const;

 private:
  std::shared_ptr<const FiniteField> field_;
  UniPoly<Fp> rep_;
};

}  // namespace modcurve
