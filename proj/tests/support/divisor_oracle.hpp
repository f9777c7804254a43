#pragma once

// Brute-force divisor classes on y^2 = f(x), f monic sextic over F_p (p odd), using the
// points over F_{p^2}. Classes are effective degree-2 rational divisors D, standing for
// D - (inf+ + inf-), with every divisor of the form P + iota(P) identified to zero
// (these are the divisors of x - c). Sums are found by searching the functions
// alpha(x) and y - w(x), deg alpha, deg w <= 3, for one vanishing on D1 + D2.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modcurve/finite_field.hpp"
#include "modcurve/genus2.hpp"

namespace oracle {

using modcurve::FiniteField;
using modcurve::FqElement;
using modcurve::PointKind;
using Poly = modcurve::UniPoly<FqElement>;

struct Pt {
  PointKind kind;
  FqElement x, y;
};

class DivisorOracle {
 public:
  using Divisor = std::pair<std::size_t, std::size_t>;  // sorted point indices

  // f given by its coefficients in F_p, constant term first.
  DivisorOracle(std::uint64_t p, const std::vector<long>& coeffs) : p_(p), big_(FiniteField::extension(p, 2)) {
    std::vector<FqElement> cs;
    for (long c : coeffs) cs.push_back(big_->from_int(c));
    f_ = Poly(std::move(cs), big_->zero());
    if (f_.degree() != 6 || !f_.is_monic()) throw std::invalid_argument("oracle needs a monic sextic");
    for (std::uint64_t i = 0; i < big_->size(); ++i) {
      const FqElement x = big_->element(i);
      const FqElement fx = f_.eval(x);
      for (std::uint64_t j = 0; j < big_->size(); ++j) {
        const FqElement y = big_->element(j);
        if (y * y == fx) pts_.push_back({PointKind::Affine, x, y});
      }
    }
    plus_ = pts_.size();
    pts_.push_back({PointKind::InfinityPlus, big_->zero(), big_->zero()});
    minus_ = pts_.size();
    pts_.push_back({PointKind::InfinityMinus, big_->zero(), big_->zero()});
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      frob_.push_back(find(frobenius(pts_[i])));
      iota_.push_back(find(conjugate(pts_[i])));
    }
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      for (std::size_t j = i; j < pts_.size(); ++j) {
        Divisor d{i, j};
        if (apply(frob_, d) == d) divisors_.push_back(d);
      }
    }
    build_functions();
  }

  const std::vector<Pt>& points() const { return pts_; }
  const std::shared_ptr<const FiniteField>& field() const { return big_; }
  const Poly& f() const { return f_; }

  // Representatives of all rational classes (the zero class once, as {inf+, inf-}).
  std::vector<Divisor> classes() const {
    std::vector<Divisor> out{{plus_, minus_}};
    for (const auto& d : divisors_)
      if (!is_zero_class(d)) out.push_back(d);
    return out;
  }

  Divisor canonical(const Divisor& d) const { return is_zero_class(d) ? Divisor{plus_, minus_} : d; }

  Divisor add(const Divisor& a, const Divisor& b) const {
    std::map<std::size_t, int> need;
    for (std::size_t i : {a.first, a.second, b.first, b.second}) need[i] += 1;
    for (const auto& zeros : functions_) {
      bool ok = true;
      for (const auto& [i, k] : need)
        if (zeros[i] < k) ok = false;
      if (!ok) continue;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        int left = zeros[i] - (need.count(i) ? need.at(i) : 0);
        for (int t = 0; t < left; ++t) rest.push_back(i);
      }
      if (rest.size() != 2) throw std::logic_error("residual divisor has wrong degree");
      return canonical(apply(iota_, Divisor{rest[0], rest[1]}));
    }
    throw std::logic_error("no function vanishes on D1 + D2");
  }

  // Mumford triple over F_{p^2} of the class D - (inf+ + inf-).
  modcurve::MumfordClass<FqElement> mumford(const Divisor& d) const {
    const Poly one = Poly::constant(big_->one());
    if (is_zero_class(d)) return {one, Poly(big_->zero()), 1};
    int n = 0;
    std::vector<std::size_t> aff;
    for (std::size_t i : {d.first, d.second}) {
      if (i == plus_) {
        ++n;
      } else if (i != minus_) {
        aff.push_back(i);
      }
    }
    if (aff.empty()) return {one, Poly(big_->zero()), n};
    const Pt& P = pts_[aff[0]];
    if (aff.size() == 1) return {Poly::linear_root(P.x), Poly::constant(P.y), n};
    const Pt& Q = pts_[aff[1]];
    Poly u = Poly::linear_root(P.x) * Poly::linear_root(Q.x);
    FqElement slope = aff[0] == aff[1] ? f_.derivative().eval(P.x) / (P.y + P.y) : (Q.y - P.y) / (Q.x - P.x);
    Poly v = Poly::constant(P.y) + Poly::linear_root(P.x) * slope;
    return {u, v, n};
  }

 private:
  Pt frobenius(const Pt& q) const {
    if (q.kind != PointKind::Affine) return q;
    return {q.kind, q.x.pow(modcurve::Integer(p_)), q.y.pow(modcurve::Integer(p_))};
  }
  Pt conjugate(const Pt& q) const {
    if (q.kind == PointKind::InfinityPlus) return {PointKind::InfinityMinus, q.x, q.y};
    if (q.kind == PointKind::InfinityMinus) return {PointKind::InfinityPlus, q.x, q.y};
    return {q.kind, q.x, -q.y};
  }
  std::size_t find(const Pt& q) const {
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      const Pt& r = pts_[i];
      if (r.kind == q.kind && (r.kind != PointKind::Affine || (r.x == q.x && r.y == q.y))) return i;
    }
    throw std::logic_error("point not found");
  }
  static Divisor apply(const std::vector<std::size_t>& perm, const Divisor& d) {
    std::size_t a = perm[d.first], b = perm[d.second];
    return a <= b ? Divisor{a, b} : Divisor{b, a};
  }
  bool is_zero_class(const Divisor& d) const { return iota_[d.first] == d.second; }

  static int root_multiplicity(Poly g, const FqElement& c) {
    if (g.is_zero()) throw std::logic_error("zero polynomial");
    int k = 0;
    const Poly l = Poly::linear_root(c);
    for (;;) {
      auto [q, r] = g.divmod(l);
      if (!r.is_zero()) return k;
      g = q;
      ++k;
    }
  }

  void build_functions() {
    std::vector<Poly> cubics;
    const std::uint64_t total = p_ * p_ * p_ * p_;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FqElement> cs;
      std::uint64_t c = code;
      for (int i = 0; i < 4; ++i, c /= p_) cs.push_back(big_->from_int(static_cast<long>(c % p_)));
      cubics.emplace_back(std::move(cs), big_->zero());
    }
    const FqElement one = big_->one();
    for (const auto& alpha : cubics) {
      if (alpha.is_zero()) continue;
      std::vector<int> z(pts_.size(), 0);
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        const Pt& q = pts_[i];
        if (q.kind == PointKind::Affine) {
          z[i] = root_multiplicity(alpha, q.x) * (q.y.is_zero() ? 2 : 1);
        } else {
          z[i] = 3 - alpha.degree();
        }
      }
      push(std::move(z));
    }
    for (const auto& w : cubics) {
      const Poly rest = f_ - w * w;
      const FqElement lead = w.coeff(3);
      std::vector<int> z(pts_.size(), 0);
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        const Pt& q = pts_[i];
        if (q.kind == PointKind::Affine) {
          if (!(w.eval(q.x) == q.y)) continue;
          z[i] = q.y.is_zero() ? 1 : root_multiplicity(rest, q.x);
        } else if (q.kind == PointKind::InfinityPlus) {
          z[i] = lead == one ? 6 - rest.degree() : 0;
        } else {
          z[i] = lead == -one ? 6 - rest.degree() : 0;
        }
      }
      push(std::move(z));
    }
  }

  // Zeros off the F_{p^2}-points are not recorded; a function that vanishes on a degree-4
  // rational divisor has its remaining two zeros at a rational degree-2 divisor, hence visible.
  void push(std::vector<int> z) {
    int total = 0;
    for (int k : z) total += k;
    if (total > 6) throw std::logic_error("function divisor has wrong degree");
    functions_.push_back(std::move(z));
  }

  std::uint64_t p_;
  std::shared_ptr<const FiniteField> big_;
  Poly f_;
  std::vector<Pt> pts_;
  std::size_t plus_ = 0, minus_ = 0;
  std::vector<std::size_t> frob_, iota_;
  std::vector<Divisor> divisors_;
  std::vector<std::vector<int>> functions_;
};

}  // namespace oracle
