#pragma once

// Exact dense linear algebra over prime fields F_p. Everything here is value
// semantics; subspaces are kept in reduced row-echelon form so that equality
// of spans is equality of representations.

#include <cstdint>
#include <vector>

#include "fir/errors.hpp"

namespace fir {

bool is_prime(std::uint64_t n);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Dense matrix over F_p, entries stored row-major as residues in [0, p).
/// Every product is reduced before accumulation, so any prime p < 2^31 is
/// exact in 64-bit intermediates.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, int rows, int cols);
  FpMatrix(std::uint32_t p, int rows, int cols, std::vector<std::uint32_t> entries);
  static FpMatrix identity(std::uint32_t p, int n);

  std::uint32_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint32_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  bool operator==(const FpMatrix&) const = default;

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix transposed() const;
  bool is_identity() const;

  /// m * v with v a column vector.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

  /// Smallest k >= 1 with m^k = I; Internal error if none below `cap`.
  int multiplicative_order(int cap = 1 << 20) const;

 private:
  std::uint32_t p_ = 2;
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

FpMatrix rref(FpMatrix m);
int rank(const FpMatrix& m);

/// Subspace of F_p^n held as an RREF basis (no zero rows, distinct pivots).
/// Two subspaces are equal iff their representations are identical.
class FpSubspace {
 public:
  FpSubspace() = default;
  static FpSubspace zero(std::uint32_t p, int ambient_dim);
  static FpSubspace full(std::uint32_t p, int ambient_dim);
  static FpSubspace from_span(std::uint32_t p, int ambient_dim,
                              const std::vector<std::vector<std::uint32_t>>& rows);
  static FpSubspace from_matrix_rows(const FpMatrix& m);

  std::uint32_t p() const { return basis_.p(); }
  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Canonical coset representative: v with all pivot coordinates eliminated.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;
  bool contains(const std::vector<std::uint32_t>& v) const;
  bool contains(const FpSubspace& other) const;

  bool operator==(const FpSubspace&) const = default;

 private:
  int ambient_ = 0;
  FpMatrix basis_;           // dim x ambient, RREF
  std::vector<int> pivots_;  // pivot column per basis row
};

/// Right null space {x : m x = 0}, canonical basis.
FpSubspace kernel(const FpMatrix& m);

FpSubspace sum(const FpSubspace& u, const FpSubspace& w);
FpSubspace intersection(const FpSubspace& u, const FpSubspace& w);
/// dim(space/sub); requires sub <= space.
int quotient_dim(const FpSubspace& space, const FpSubspace& sub);

struct CommutantSolution {
  int dim = 0;
  std::vector<FpMatrix> basis;  // b x a matrices
};

/// Solution space {X : X A_i = B_i X for all i} with A_i of size a x a and
/// B_i of size b x b; X ranges over b x a matrices. When the families are the
/// element (or generator) actions of two modules, this is Hom(module_A, module_B).
CommutantSolution solve_commutant(const std::vector<FpMatrix>& a_family,
                                  const std::vector<FpMatrix>& b_family, int a_dim, int b_dim,
                                  std::uint32_t p);

}  // namespace fir
