#pragma once

// Modules over group algebras F_p G and the cyclicity tests the criteria
// consume. Every module stores the full element-indexed action family; the
// searches are exhaustive and deterministic (lexicographically first
// witnesses).

#include <cstdint>
#include <optional>
#include <vector>

#include "fir/fplinalg.hpp"
#include "fir/group.hpp"

namespace fir {

inline constexpr std::uint64_t kDefaultSearchCap = 1u << 16;

/// Finite-dimensional F_p G-module: an invertible matrix per group element.
class FpModule {
 public:
  FpModule() = default;

  /// One matrix per group element; validated as a homomorphism (all pairs for
  /// |G| <= kAssocValidationCap, generator pairs above).
  static FpModule from_full_family(const FiniteGroup& g, std::uint32_t p, int dim,
                                   std::vector<FpMatrix> act);

  /// Matrices for a generating set, extended to all of G by breadth-first
  /// products; InvalidAction if the set does not generate or is inconsistent.
  static FpModule from_generator_images(const FiniteGroup& g, std::uint32_t p, int dim,
                                        const std::vector<std::pair<int, FpMatrix>>& images);

  const FiniteGroup& group() const { return *group_; }
  std::uint32_t p() const { return p_; }
  int dim() const { return dim_; }
  const FpMatrix& action(int g) const { return act_[g]; }
  const std::vector<FpMatrix>& actions() const { return act_; }
  /// Actions of the group's generating sequence (what spin iterates over).
  std::vector<FpMatrix> generator_actions() const;

 private:
  const FiniteGroup* group_ = nullptr;
  std::uint32_t p_ = 2;
  int dim_ = 0;
  std::vector<FpMatrix> act_;
};

FpModule dual_module(const FpModule& m);
FpModule direct_sum(const FpModule& a, const FpModule& b);

/// Smallest action-invariant subspace containing v.
FpSubspace spin(const FpModule& m, const std::vector<std::uint32_t>& v);

struct CyclicSearch {
  bool cyclic = false;
  std::optional<std::vector<std::uint32_t>> generator;  // lexicographically first witness
};
/// Exhaustive search for a vector whose spin is everything.
CyclicSearch is_cyclic_spin(const FpModule& m, std::uint64_t cap = kDefaultSearchCap);

struct IsotypicComponent {
  FpSubspace irreducible_basis;  // one representative irreducible submodule
  int r = 0;                     // its F_p-dimension
  int g = 0;                     // dim_{F_p} End(W)
  int s = 0;                     // multiplicity in the module
};
struct IsotypicSummary {
  std::vector<IsotypicComponent> components;
};

/// Isotypic decomposition of a completely reducible module. Validates the
/// accounting sum s*r = dim and raises NotCompletelyReducible otherwise.
IsotypicSummary decompose(const FpModule& m, std::uint64_t cap = kDefaultSearchCap);

/// Multiplicity criterion: every component satisfies s*g <= r.
bool akizuki_cyclic(const FpModule& m, std::uint64_t cap = kDefaultSearchCap);

struct HyperplaneSearch {
  bool exists = false;
  std::optional<std::vector<std::uint32_t>> functional;  // first nonzero coeff normalized to 1
};
/// Searches for a linear functional whose kernel contains no nonzero
/// submodule (the kernel of such a functional is a maximal subgroup of the
/// carrier with trivial core). The constraint family ranges over all group
/// elements. A zero module reports true (its dual is cyclic).
HyperplaneSearch weisner_hyperplane_exists(const FpModule& m,
                                           std::uint64_t cap = kDefaultSearchCap);

/// Largest submodule contained in ker(functional): {v : functional(g.v) = 0 for all g}.
FpSubspace largest_submodule_in_kernel(const FpModule& m,
                                       const std::vector<std::uint32_t>& functional);

/// Enumeration helpers (lexicographic, index 0 is the zero vector).
std::vector<std::uint32_t> vector_from_code(std::uint64_t code, std::uint32_t p, int dim);

}  // namespace fir
