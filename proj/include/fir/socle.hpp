#pragma once

// Soc(G) and its decomposition: non-abelian part, abelian p-parts realized as
// F_p G-modules under conjugation, and the prime set Pi(G).

#include <vector>

#include "fir/group.hpp"
#include "fir/modrep.hpp"

namespace fir {

/// T(G)_p as an F_p-coordinatized elementary abelian subgroup with the
/// conjugation module of G on it.
struct TpModule {
  int p = 0;
  SubgroupSet carrier;              // the subgroup T(G)_p
  std::vector<int> basis_elements;  // group elements forming an F_p-basis
  FpModule module;                  // conjugation action, one matrix per element

  int dim() const { return static_cast<int>(basis_elements.size()); }
  /// Coordinates of a carrier element (fails if not in the carrier).
  std::vector<std::uint32_t> coords(int element) const;
  /// Carrier element with the given coordinates.
  int element_at(const std::vector<std::uint32_t>& c) const;

  // Internal maps, exposed for the property tests.
  std::vector<int> carrier_members_by_code;      // code -> element
  std::vector<std::uint32_t> code_of_member;     // position in carrier.members() -> code
};

struct SocleReport {
  std::vector<SubgroupSet> minimal_normals;
  SubgroupSet sr;                 // product of the non-abelian minimal normals
  std::vector<TpModule> t_parts;  // one per prime, ascending
  std::vector<int> primes;        // Pi(G)
  SubgroupSet socle;
};

/// Conjugation action of G on an elementary abelian normal subgroup with the
/// given basis. CarrierNotNormal if conjugation leaves the carrier.
FpModule conjugation_module(const FiniteGroup& g, const SubgroupSet& carrier,
                            const std::vector<int>& basis_elements, int p);

SocleReport socle_report(const FiniteGroup& g);

}  // namespace fir
