#include "fir/socle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fir {

namespace {

// Coordinate bookkeeping for an elementary abelian subgroup: bijection
// between F_p^d codes (lexicographic, v_0 most significant) and elements.
struct CoordinateMap {
  std::vector<int> element_of_code;
  std::map<int, std::uint64_t> code_of_element;
};

CoordinateMap build_coordinates(const FiniteGroup& g, const SubgroupSet& carrier,
                                const std::vector<int>& basis, int p) {
  const int d = static_cast<int>(basis.size());
  std::uint64_t size = 1;
  for (int i = 0; i < d; ++i) size *= p;
  if (size != static_cast<std::uint64_t>(carrier.order()))
    fail(Err::AbelianMinimalNotElementary,
         "basis of size " + std::to_string(d) + " does not coordinatize carrier of order " +
             std::to_string(carrier.order()));
  CoordinateMap cm;
  cm.element_of_code.resize(size);
  for (std::uint64_t code = 0; code < size; ++code) {
    auto v = vector_from_code(code, p, d);
    int x = 0;
    for (int i = 0; i < d; ++i)
      for (std::uint32_t k = 0; k < v[i]; ++k) x = g.mul(x, basis[i]);
    cm.element_of_code[code] = x;
    if (!cm.code_of_element.emplace(x, code).second)
      fail(Err::AbelianMinimalNotElementary, "coordinate map is not a bijection");
  }
  return cm;
}

}  // namespace

std::vector<std::uint32_t> TpModule::coords(int element) const {
  const auto& members = carrier.members();
  auto it = std::lower_bound(members.begin(), members.end(), element);
  if (it == members.end() || *it != element) fail(Err::Internal, "element not in carrier");
  return vector_from_code(code_of_member[it - members.begin()], p, dim());
}

int TpModule::element_at(const std::vector<std::uint32_t>& c) const {
  std::uint64_t code = 0;
  for (int i = 0; i < dim(); ++i) code = code * p + (c[i] % p);
  return carrier_members_by_code[code];
}

FpModule conjugation_module(const FiniteGroup& g, const SubgroupSet& carrier,
                            const std::vector<int>& basis_elements, int p) {
  if (!is_normal(g, carrier)) fail(Err::CarrierNotNormal, "carrier is not normal");
  const int d = static_cast<int>(basis_elements.size());
  CoordinateMap cm = build_coordinates(g, carrier, basis_elements, p);
  std::vector<FpMatrix> act;
  act.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    FpMatrix m(static_cast<std::uint32_t>(p), d, d);
    for (int i = 0; i < d; ++i) {
      const int image = g.conj(x, basis_elements[i]);
      auto it = cm.code_of_element.find(image);
      if (it == cm.code_of_element.end())
        fail(Err::CarrierNotNormal, "conjugate leaves the carrier");
      auto v = vector_from_code(it->second, p, d);
      for (int j = 0; j < d; ++j) m(j, i) = v[j];
    }
    act.push_back(std::move(m));
  }
  return FpModule::from_full_family(g, static_cast<std::uint32_t>(p), d, std::move(act));
}

SocleReport socle_report(const FiniteGroup& g) {
  SocleReport report;
  report.minimal_normals = minimal_normal_subgroups(g);
  std::vector<int> socle_seeds, sr_seeds;
  std::map<int, std::vector<const SubgroupSet*>> abelian_by_prime;
  for (const auto& n : report.minimal_normals) {
    for (int x : n.members()) socle_seeds.push_back(x);
    if (is_abelian(n)) {
      // An abelian minimal normal subgroup of a finite group is elementary
      // abelian of prime exponent.
      const auto ps = prime_divisors(n.order());
      if (ps.size() != 1) fail(Err::AbelianMinimalNotElementary, "mixed-order minimal normal");
      const int p = ps[0];
      for (int x : n.members())
        if (x != 0 && g.element_order(x) != p)
          fail(Err::AbelianMinimalNotElementary, "element of composite order");
      abelian_by_prime[p].push_back(&n);
    } else {
      for (int x : n.members()) sr_seeds.push_back(x);
    }
  }
  report.sr = SubgroupSet::generated_by(g, sr_seeds);
  report.socle = SubgroupSet::generated_by(g, socle_seeds);

  for (const auto& [p, mins] : abelian_by_prime) {
    // Carrier: the product of every abelian minimal normal p-subgroup.
    std::vector<int> carrier_seeds;
    for (const auto* n : mins)
      for (int x : n->members()) carrier_seeds.push_back(x);
    SubgroupSet carrier = SubgroupSet::generated_by(g, carrier_seeds);

    // Greedy independent subfamily in canonical order; complete reducibility
    // makes the direct product reach the whole carrier.
    std::vector<const SubgroupSet*> chosen;
    SubgroupSet current = SubgroupSet::trivial(g);
    for (const auto* n : mins) {
      if (intersect(*n, current).order() == 1) {
        chosen.push_back(n);
        std::vector<int> seeds = current.members();
        for (int x : n->members()) seeds.push_back(x);
        current = SubgroupSet::generated_by(g, seeds);
      }
    }
    if (!(current == carrier)) fail(Err::Internal, "greedy direct sum missed the carrier");

    // Basis: concatenate the selected subgroups' elements, keeping each one
    // that is independent from everything taken so far.
    std::vector<int> basis;
    SubgroupSet generated = SubgroupSet::trivial(g);
    for (const auto* n : chosen)
      for (int x : n->members()) {
        if (x == 0 || generated.contains(x)) continue;
        basis.push_back(x);
        std::vector<int> seeds = generated.members();
        seeds.push_back(x);
        generated = SubgroupSet::generated_by(g, seeds);
      }

    TpModule tp;
    tp.p = p;
    tp.carrier = carrier;
    tp.basis_elements = basis;
    tp.module = conjugation_module(g, carrier, basis, p);
    CoordinateMap cm = build_coordinates(g, carrier, basis, p);
    tp.carrier_members_by_code = cm.element_of_code;
    tp.code_of_member.resize(carrier.order());
    const auto& members = carrier.members();
    for (int i = 0; i < carrier.order(); ++i)
      tp.code_of_member[i] = static_cast<std::uint32_t>(cm.code_of_element.at(members[i]));
    report.primes.push_back(p);
    report.t_parts.push_back(std::move(tp));
  }
  return report;
}

}  // namespace fir
