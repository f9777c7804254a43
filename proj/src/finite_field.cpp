#include "modcurve/finite_field.hpp"

#include <sstream>
#include <vector>

#include "modcurve/factor.hpp"

namespace modcurve {

FiniteField::FiniteField(Token, std::uint64_t p, UniPoly<Fp> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw Error("finite field modulus must have degree >= 1");
  modulus_ = modulus_.monic();
  if (!is_irreducible(modulus_)) throw Error("finite field modulus is not irreducible: " + modulus_.to_string("t"));
  mpz_ui_pow_ui(order_.get_mpz_t(), p_, static_cast<unsigned long>(modulus_.degree()));
}

std::shared_ptr<const FiniteField> FiniteField::create(std::uint64_t p, const UniPoly<Fp>& modulus) {
  return std::make_shared<const FiniteField>(Token{}, p, modulus);
}

std::shared_ptr<const FiniteField> FiniteField::prime(std::uint64_t p) {
  return create(p, UniPoly<Fp>::x(Fp(p, 0)));
}

std::shared_ptr<const FiniteField> FiniteField::extension(std::uint64_t p, unsigned f) {
  if (f == 1) return prime(p);
  // Enumerate monic polynomials of degree f by the base-p digits of a counter.
  std::uint64_t total = 1;
  for (unsigned i = 0; i < f; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fp> cs;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < f; ++i) {
      cs.emplace_back(p, static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    cs.emplace_back(p, 1);
    UniPoly<Fp> cand(std::move(cs), Fp(p, 0));
    if (is_irreducible(cand)) return create(p, cand);
  }
  throw Error("no irreducible polynomial found");
}

FqElement FiniteField::zero() const { return FqElement(shared_from_this(), UniPoly<Fp>(Fp(p_, 0))); }
FqElement FiniteField::one() const { return from_int(1); }
FqElement FiniteField::gen() const { return from_poly(UniPoly<Fp>::x(Fp(p_, 0))); }
FqElement FiniteField::from_int(long n) const {
  return FqElement(shared_from_this(), UniPoly<Fp>::constant(Fp(p_, n)));
}
FqElement FiniteField::from_prime(const Fp& c) const {
  return FqElement(shared_from_this(), UniPoly<Fp>::constant(Fp(p_, static_cast<std::int64_t>(c.value()))));
}
FqElement FiniteField::from_poly(const UniPoly<Fp>& r) const { return FqElement(shared_from_this(), r % modulus_); }

FqElement FiniteField::element(std::uint64_t index) const {
  std::vector<Fp> cs;
  for (unsigned i = 0; i < degree(); ++i) {
    cs.emplace_back(p_, static_cast<std::int64_t>(index % p_));
    index /= p_;
  }
  return FqElement(shared_from_this(), UniPoly<Fp>(std::move(cs), Fp(p_, 0)));
}

FqElement::FqElement(std::shared_ptr<const FiniteField> field, UniPoly<Fp> rep)
    : field_(std::move(field)), rep_(std::move(rep)) {}

FqElement FqElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  auto [g, s, t] = xgcd(rep_, field_->modulus());
  (void)t;
  (void)g;
  return FqElement(field_, s % field_->modulus());
}

FqElement FqElement::pow(const Integer& e) const {
  if (e < 0) return inv().pow(-e);
  return FqElement(field_, powmod(rep_, e, field_->modulus()));
}

bool FqElement::is_square() const {
  if (is_zero() || field_->characteristic() == 2) return true;
  return pow((field_->order() - 1) / 2) == one();
}

std::optional<FqElement> FqElement::sqrt() const {
  if (is_zero()) return *this;
  if (field_->characteristic() == 2) return pow(field_->order() / 2);
  if (!is_square()) return std::nullopt;
  Integer q = field_->order() - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  FqElement z = one();
  for (std::uint64_t i = 2;; ++i) {
    z = field_->element(i);
    if (!z.is_square()) break;
  }
  FqElement c = z.pow(q);
  FqElement x = pow((q + 1) / 2);
  FqElement t = pow(q);
  unsigned m = s;
  const FqElement unit = one();
  while (!(t == unit)) {
    unsigned i = 0;
    FqElement tt = t;
    while (!(tt == unit)) {
      tt *= tt;
      ++i;
    }
    FqElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

FqElement FqElement::frobenius() const {
  return pow(Integer(static_cast<unsigned long>(field_->characteristic())));
}

std::uint64_t FqElement::index() const {
  std::uint64_t idx = 0;
  const std::uint64_t p = field_->characteristic();
  for (std::size_t i = field_->degree(); i-- > 0;) idx = idx * p + rep_.coeff(i).value();
  return idx;
}

std::string FqElement::to_string() const {
  if (field_->degree() == 1) return rep_.coeff(0).to_string();
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < field_->degree(); ++i) os << (i ? "," : "") << rep_.coeff(i).value();
  os << "]";
  return os.str();
}

}  // namespace modcurve
