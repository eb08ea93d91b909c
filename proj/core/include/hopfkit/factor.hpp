#pragma once

#include <optional>
#include <vector>

#include "hopfkit/poly.hpp"

namespace hopfkit {

struct RationalFactor {
  Poly<Rational> factor;  // monic, irreducible over Q
  unsigned multiplicity = 0;
};

/// p = unit * prod factor^multiplicity with every factor monic and irreducible over Q.
struct RationalFactorization {
  Rational unit;
  std::vector<RationalFactor> factors;
};

/// Complete factorization over Q: squarefree decomposition, then for each
/// squarefree part a modular factorization at a prime above 2^30, Hensel lifting
/// and subset recombination. Factors are sorted by degree, then coefficients.
/// Throws on the zero polynomial; constants return an empty factor list.
RationalFactorization factor_rational(const Poly<Rational>& p);

/// Irreducible monic factors of a squarefree rational polynomial over Q(zeta_order),
/// by Trager's norm method. Throws if p is not squarefree.
std::vector<Poly<CycScalar>> factor_over_cyclotomic(const Poly<Rational>& p, unsigned order);

/// n/d with |n|, d <= sqrt(modulus / 2) and n = residue * d (mod modulus), if it exists.
std::optional<Rational> rational_reconstruction(const Integer& residue, const Integer& modulus);

/// Norm of p(x) from Q(zeta_N)[x] down to Q[x]: the product of all Galois conjugates.
Poly<Rational> norm_polynomial(const Poly<CycScalar>& p, unsigned order);

}  // namespace hopfkit
