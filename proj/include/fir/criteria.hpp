#pragma once

// The verdict layer: published criteria and sufficient conditions for a
// finite group to have a faithful irreducible representation, parameterized
// by field characteristic.

#include <optional>
#include <vector>

#include "fir/group.hpp"
#include "fir/socle.hpp"

namespace fir {

struct PrimeCriterionDetail {
  int p = 0;
  int dim = 0;  // dim_{F_p} T(G)_p
  bool gaschuetz = false;
  bool weisner = false;
  bool akizuki = false;
  std::optional<std::vector<std::uint32_t>> cyclic_generator;       // module coords
  std::optional<std::vector<std::uint32_t>> hyperplane_functional;  // normalized functional
};

struct CriterionReport {
  long long characteristic = 0;  // 0 or prime
  std::vector<int> primes;       // Pi(G)
  std::vector<PrimeCriterionDetail> per_prime;
  bool gaschuetz = true;  // aggregates over Pi(G); vacuously true when empty
  bool weisner = true;
  bool akizuki = true;
  bool verdict = true;  // at `characteristic`
  bool burnside_sufficient = true;
  bool kochendorffer_sufficient = true;
  bool is_nilpotent = false;
  bool center_cyclic = true;
  std::optional<bool> fite;  // center-cyclic test; set only for nilpotent groups
};

bool gaschuetz(const FiniteGroup& g);
bool weisner(const FiniteGroup& g);
bool akizuki(const FiniteGroup& g);

/// No two distinct minimal normal subgroups of prime-power order share a
/// prime. Sufficient for a faithful irreducible representation, not necessary.
bool burnside_sufficient(const FiniteGroup& g);
/// Every Sylow subgroup has cyclic center. Sufficient, not necessary.
bool kochendorffer_sufficient(const FiniteGroup& g);
/// Center-is-cyclic test; engaged only for nilpotent groups, where it is a
/// full criterion.
std::optional<bool> fite_nilpotent(const FiniteGroup& g);

/// Full report: per-prime details with witnesses, the aggregate criteria, the
/// characteristic-aware verdict, and the sufficient-condition flags.
CriterionReport verdict(const FiniteGroup& g, long long characteristic);
/// Same, reusing an already-computed socle decomposition.
CriterionReport verdict(const FiniteGroup& g, long long characteristic, const SocleReport& socle);

}  // namespace fir
