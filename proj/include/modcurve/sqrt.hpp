#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "modcurve/finite_field.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/prime_field.hpp"
#include "modcurve/quad_ext.hpp"
#include "modcurve/rational.hpp"

namespace modcurve {

// Controls the numeric reconstruction used for square roots in K.
struct SqrtOptions {
  unsigned precision_bits = 256;
  unsigned max_precision_bits = 4096;
};

// Reduction K -> F_p[t]/(factor) sending a to t. The residue field's modulus must divide the
// minimal polynomial of K modulo p. Throws NotPIntegral if p divides the denominator.
FqElement residue_reduce(const NFElement& x, const std::shared_ptr<const FiniteField>& residue_field);

// Residue fields of the primes of K above p, one per irreducible factor of the minimal
// polynomial mod p (p unramified).
std::vector<std::shared_ptr<const FiniteField>> residue_fields_above(std::uint64_t p, std::uint64_t seed = 0);

// Values of x under the six real embeddings, at double precision.
std::vector<double> real_embeddings(const NFElement& x);

// Square roots. A returned value t always satisfies t*t == s exactly.
std::optional<Rational> sqrt_in_field(const Rational& s, const SqrtOptions& = {});
std::optional<Fp> sqrt_in_field(const Fp& s, const SqrtOptions& = {});
std::optional<FqElement> sqrt_in_field(const FqElement& s, const SqrtOptions& = {});
// For K: guess from the real embeddings, verify by exact squaring. Returns nullopt only after
// an exact disproof (a negative embedding or a non-square residue modulo some prime of K);
// throws PrecisionExhausted when neither a root nor a disproof is found.
std::optional<NFElement> sqrt_in_field(const NFElement& s, const SqrtOptions& = {});

struct RationalQuadField {
  QuadFieldPtr<Rational> field;  // radicand is the squarefree integer D
  Rational scale;                // s = scale^2 * D, so sqrt(s) = scale * sqrt(D)
};

// Q(sqrt(s)) with the radicand normalized to its squarefree integer representative.
// Throws Error if s is a rational square.
RationalQuadField make_quadratic_field(const Rational& s);
// K(sqrt(s)) with the radicand kept as given. Throws Error if s is a square in K.
QuadFieldPtr<NFElement> make_quadratic_field(const NFElement& s, const SqrtOptions& opts = {});

}  // namespace modcurve
