#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modcurve/prime_field.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

struct FactorPower {
  UniPoly<Fp> factor;  // monic irreducible
  unsigned multiplicity;
};

// Coefficient-wise reduction; throws NotPIntegral when p divides a denominator.
UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& g, std::uint64_t p);

// Rabin irreducibility test over F_p.
bool is_irreducible(const UniPoly<Fp>& g);

// Squarefree decomposition of a monic polynomial: pairs (squarefree factor, multiplicity).
std::vector<FactorPower> squarefree_decomposition(const UniPoly<Fp>& g);

// Splits a monic squarefree polynomial into (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly<Fp>, unsigned>> distinct_degree_factorization(const UniPoly<Fp>& g);

// Cantor-Zassenhaus splitting of a monic squarefree product of degree-d irreducibles.
std::vector<UniPoly<Fp>> equal_degree_factorization(const UniPoly<Fp>& g, unsigned d, std::uint64_t seed);

// Complete factorization into monic irreducibles. Factors are sorted by degree, then by
// coefficients from the constant term up; the seed only affects the splitting path.
std::vector<FactorPower> factor_fp(const UniPoly<Fp>& g, std::uint64_t seed = 0);

std::vector<FactorPower> factor_mod_p(const UniPoly<Rational>& g, std::uint64_t p, std::uint64_t seed = 0);

}  // namespace modcurve
