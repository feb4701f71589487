#pragma once

// Group-spec grammar shared by the library corpus and the CLI:
//   cyclic:N
//   perm:(c y c l e s);(...)        1-based cycle notation, ';' between generators
//   cayley:PATH                     CSV of indices, one row per line
//   gdq:D,Q                         G(d,q) = V semidirect F_q^*
//   gq:Q                            G(q) = G(1,q)
//   product:SPEC*SPEC               right-associative on the first '*'
//   burnside | isaacs

#include <memory>
#include <string>
#include <vector>

#include "fir/group.hpp"

namespace fir {

struct GroupSpec {
  enum class Kind { Cyclic, Perm, Cayley, Gdq, Gq, Product, Burnside, Isaacs };

  Kind kind = Kind::Cyclic;
  int n = 1;            // cyclic order
  int d = 1, q = 2;     // gdq / gq parameters
  std::vector<std::vector<int>> perm_gens;  // 0-based images
  std::string path;                         // cayley file
  std::vector<GroupSpec> factors;           // product: exactly two

  static GroupSpec parse(const std::string& text);  // ParseError on bad input
  std::string to_string() const;                    // canonical round-trip form
  FiniteGroup build(int order_cap = kDefaultOrderCap) const;
};

}  // namespace fir
