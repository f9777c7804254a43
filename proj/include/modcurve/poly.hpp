#pragma once

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/finite_field.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/prime_field.hpp"
#include "modcurve/rational.hpp"
#include "modcurve/sqrt.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

// Total order on field elements by coordinates (constant term first for K).
inline std::strong_ordering coordinate_compare(const Rational& a, const Rational& b) { return a <=> b; }
inline std::strong_ordering coordinate_compare(const NFElement& a, const NFElement& b) { return a.lex_compare(b); }
inline std::strong_ordering coordinate_compare(const Fp& a, const Fp& b) { return a.value() <=> b.value(); }
inline std::strong_ordering coordinate_compare(const FqElement& a, const FqElement& b) { return a.index() <=> b.index(); }

// x -> (p x + q) / (r x + s)
template <class E>
struct MoebiusMap {
  E p, q, r, s;

  MoebiusMap(E p_, E q_, E r_, E s_) : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
    if (determinant().is_zero()) throw Error("degenerate Moebius map");
  }
  static MoebiusMap identity(const E& like) { return MoebiusMap(like.one(), like.zero(), like.zero(), like.one()); }

  E determinant() const { return p * s - q * r; }

  // (this o other)(x) = this(other(x))
  MoebiusMap compose(const MoebiusMap& o) const {
    return MoebiusMap(p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s);
  }

  // Affine image; throws DivisionByZero at the pole.
  E apply(const E& x) const { return (p * x + q) / (r * x + s); }

  bool is_scalar() const { return q.is_zero() && r.is_zero() && p == s; }
};

template <class E>
bool moebius_is_involution(const MoebiusMap<E>& m) {
  return !m.is_scalar() && m.compose(m).is_scalar();
}

// f((px+q)/(rx+s)) * (rx+s)^6
template <class E>
UniPoly<E> moebius_transform_sextic(const UniPoly<E>& f, const MoebiusMap<E>& m) {
  if (f.degree() != 6) throw DegreeError("moebius_transform_sextic needs a sextic");
  const E z = f.zero_element();
  const UniPoly<E> num(std::vector<E>{m.q, m.p}, z);
  const UniPoly<E> den(std::vector<E>{m.s, m.r}, z);
  std::array<UniPoly<E>, 7> np, dp;
  np[0] = dp[0] = UniPoly<E>::constant(z.one());
  for (std::size_t i = 1; i <= 6; ++i) {
    np[i] = np[i - 1] * num;
    dp[i] = dp[i - 1] * den;
  }
  UniPoly<E> g(z);
  for (std::size_t i = 0; i <= 6; ++i) g += np[i] * dp[6 - i] * f.coeff(i);
  return g;
}

// If g = lambda * f for a nonzero scalar lambda, returns lambda.
template <class E>
std::optional<E> proportionality_factor(const UniPoly<E>& g, const UniPoly<E>& f) {
  if (f.is_zero() || g.degree() != f.degree()) return std::nullopt;
  const E lambda = g.lc() / f.lc();
  if (g == f * lambda) return lambda;
  return std::nullopt;
}

// Roots of t^2 + (2/c) t - b/c, ordered so that d1 has the smaller coordinate vector.
template <class E>
std::pair<E, E> solve_d_pair(const E& b, const E& c) {
  if (c.is_zero()) throw DegenerateInvolution("c = 0 in x -> (x + b)/(cx - 1)");
  const E half_sum = -c.inv();  // (d1 + d2) / 2
  const E disc = half_sum * half_sum + b / c;
  const auto root = sqrt_in_field(disc);
  if (!root) throw NotSplit("d-pair discriminant is not a square: " + disc.to_string());
  E d1 = half_sum - *root;
  E d2 = half_sum + *root;
  if (coordinate_compare(d2, d1) < 0) std::swap(d1, d2);
  return {d1, d2};
}

// Solves A x = rhs for a (rows >= cols) system of full column rank by fraction-free
// (Bareiss) elimination on the augmented matrix. Throws Inconsistent if no solution exists.
template <class E>
std::vector<E> solve_overdetermined(std::vector<std::vector<E>> a, const E& like) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size() - 1;
  E prev = like.one();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = like.zero();
    }
    prev = a[rank][col];
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (!a[i][cols].is_zero()) throw Inconsistent("linear system has no solution");
  }
  if (rank < cols) throw Inconsistent("linear system is underdetermined");
  std::vector<E> x(cols, like.zero());
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t col = pivot_col[k];
    E acc = a[k][cols];
    for (std::size_t j = col + 1; j < cols; ++j) acc -= a[k][j] * x[j];
    x[col] = acc / a[k][col];
  }
  return x;
}

template <class E>
struct EvenCoefficients {
  E c6, c4, c2, c0;
};

// sum_k c_k (x + d1)^k (x + d2)^(6 - k) over k = 6, 4, 2, 0
template <class E>
UniPoly<E> even_model_expand(const EvenCoefficients<E>& c, const E& d1, const E& d2) {
  const E z = d1.zero();
  const UniPoly<E> l1(std::vector<E>{d1, z.one()}, z);
  const UniPoly<E> l2(std::vector<E>{d2, z.one()}, z);
  const UniPoly<E> s1 = l1 * l1;
  const UniPoly<E> s2 = l2 * l2;
  return pow(s1, 3) * c.c6 + pow(s1, 2) * s2 * c.c4 + s1 * pow(s2, 2) * c.c2 + pow(s2, 3) * c.c0;
}

// Coefficients with f = c6 (x+d1)^6 + c4 (x+d1)^4 (x+d2)^2 + c2 (x+d1)^2 (x+d2)^4 + c0 (x+d2)^6.
template <class E>
EvenCoefficients<E> solve_even_model(const UniPoly<E>& f, const E& d1, const E& d2) {
  if (f.degree() > 6) throw DegreeError("solve_even_model needs degree <= 6");
  if (d1 == d2) throw DegenerateInvolution("d1 = d2");
  const E z = d1.zero();
  const UniPoly<E> l1(std::vector<E>{d1, z.one()}, z);
  const UniPoly<E> l2(std::vector<E>{d2, z.one()}, z);
  const std::array<UniPoly<E>, 4> basis = {pow(l1, 6), pow(l1, 4) * pow(l2, 2), pow(l1, 2) * pow(l2, 4), pow(l2, 6)};
  std::vector<std::vector<E>> rows(7, std::vector<E>(5, z));
  for (std::size_t i = 0; i <= 6; ++i) {
    for (std::size_t k = 0; k < 4; ++k) rows[i][k] = basis[k].coeff(i);
    rows[i][4] = f.coeff(i);
  }
  const auto sol = solve_overdetermined(std::move(rows), z);
  EvenCoefficients<E> out{sol[0], sol[1], sol[2], sol[3]};
  if (even_model_expand(out, d1, d2) != f) throw Inconsistent("even model identity fails");
  return out;
}

}  // namespace modcurve
