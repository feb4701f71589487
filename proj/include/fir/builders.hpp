#pragma once

// Deterministic constructors for the groups the tool works with.

#include <utility>
#include <vector>

#include "fir/fplinalg.hpp"
#include "fir/group.hpp"

namespace fir {

/// F_{p^e} with elements coded 0..q-1 as little-endian base-p coefficient
/// vectors of polynomials modulo the lexicographically smallest monic
/// irreducible of degree e over F_p. Code 0 is 0, code 1 is 1.
struct GaloisField {
  int p = 0, e = 0, q = 0;
  std::vector<int> modulus;  // length e, coefficients of x^0..x^{e-1}; leading 1 implicit

  static GaloisField make(int q);  // NotPrimePower if q is not a prime power

  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int coeff(int a, int i) const;  // i-th base-p digit
};

FiniteGroup cyclic(int n);

/// Index pairing (a, b) -> a*|H| + b, so (identity, identity) is 0.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// F_p^d semidirect H, where H acts through the given generator matrices
/// (extended to all of H by breadth-first products and then validated as a
/// homomorphism H -> GL_d(p)). Vector part indexed little-endian base p.
FiniteGroup semidirect_vector(std::uint32_t p, int d, const FiniteGroup& h,
                              const std::vector<std::pair<int, FpMatrix>>& generator_actions,
                              int cap = kDefaultOrderCap);

/// G(d,q) = V semidirect F_q^* with V = F_q^d and scalars acting by
/// multiplication; |G(d,q)| = q^d (q-1).
FiniteGroup affine_scalar_group(int d, int q, int cap = kDefaultOrderCap);

/// (C_3 x C_3) semidirect C_2 with the involution inverting every vector.
FiniteGroup burnside_example();
/// (C_2 x C_2 x C_2 x C_2) semidirect C_3 acting freely on nonzero vectors.
FiniteGroup isaacs_example();

}  // namespace fir
