#pragma once

// Independent ground truth: exact complex character tables computed with
// Dixon's modular method. Character values are never floating point; each
// value is an eigenvalue-multiplicity vector m over the e-th roots of unity
// (the value is sum_j m_j zeta^j), recovered exactly from mod-ell data.

#include <cstdint>
#include <vector>

#include "fir/group.hpp"

namespace fir {

inline constexpr int kDefaultOracleCap = 256;

struct ClassData {
  std::vector<std::vector<int>> classes;  // ordered by (size, smallest element)
  std::vector<int> class_of;              // element -> class index
  std::vector<int> representative;        // class -> smallest element
  std::vector<int> inverse_class;         // class of representative's inverse

  int count() const { return static_cast<int>(classes.size()); }
};

ClassData class_data(const FiniteGroup& g);

/// Class-multiplication matrix A_i with (A_i)_{jk} = a_{ijk}, the number of
/// pairs (x, y) in C_i x C_j with x y equal to the fixed representative of
/// C_k. Exact integers.
std::vector<std::vector<long long>> class_matrix(const FiniteGroup& g, const ClassData& cd,
                                                 int i);

struct CharacterRow {
  long long degree = 0;
  /// Per class: length-e vector, entry j = multiplicity of zeta^j among the
  /// eigenvalues of a representing matrix.
  std::vector<std::vector<int>> mult;
  std::vector<long long> value_mod_ell;  // per class
};

struct CharacterTable {
  long long exponent = 1;  // e
  long long ell = 0;       // working prime, ell = 1 (mod e), ell > 2 ceil(sqrt |G|)
  long long zeta = 1;      // fixed element of order e in F_ell^*
  ClassData classes;
  std::vector<CharacterRow> rows;  // sorted: degree ascending, then value order
};

CharacterTable dixon_table(const FiniteGroup& g, int oracle_cap = kDefaultOracleCap);

/// {g : all eigenvalues at g are 1}, i.e. the class multiplicity vector is
/// concentrated at exponent 0.
SubgroupSet kernel_of(const FiniteGroup& g, const CharacterTable& t, int row);

struct FaithfulWitness {
  bool exists = false;
  int row = -1;  // first row (table order) with trivial kernel
};
FaithfulWitness faithful_irreducible_exists(const FiniteGroup& g, const CharacterTable& t);

/// Row orthogonality realized in F_ell:
/// sum_i |C_i| chi(C_i) chi'(C_i^{-1}) = delta |G| (mod ell) for all pairs.
bool row_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t);

}  // namespace fir
