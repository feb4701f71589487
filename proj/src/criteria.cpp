#include "fir/criteria.hpp"

#include <algorithm>
#include <string>

#include "fir/modrep.hpp"

namespace fir {

namespace {

PrimeCriterionDetail prime_detail(const TpModule& tp) {
  PrimeCriterionDetail d;
  d.p = tp.p;
  d.dim = tp.dim();
  // Spin search is the primary route; the Akizuki formula is the independent
  // cross-check, also used as fallback if the enumeration cap is ever hit.
  try {
    auto cyc = is_cyclic_spin(tp.module);
    d.gaschuetz = cyc.cyclic;
    d.cyclic_generator = cyc.generator;
  } catch (const Error& e) {
    if (e.kind() != Err::SearchCapExceeded) throw;
    d.gaschuetz = akizuki_cyclic(tp.module);
  }
  auto hyp = weisner_hyperplane_exists(tp.module);
  d.weisner = hyp.exists;
  d.hyperplane_functional = hyp.functional;
  d.akizuki = akizuki_cyclic(tp.module);
  return d;
}

}  // namespace

bool gaschuetz(const FiniteGroup& g) {
  for (const auto& tp : socle_report(g).t_parts)
    if (!is_cyclic_spin(tp.module).cyclic) return false;
  return true;
}

bool weisner(const FiniteGroup& g) {
  for (const auto& tp : socle_report(g).t_parts)
    if (!weisner_hyperplane_exists(tp.module).exists) return false;
  return true;
}

bool akizuki(const FiniteGroup& g) {
  for (const auto& tp : socle_report(g).t_parts)
    if (!akizuki_cyclic(tp.module)) return false;
  return true;
}

namespace {

bool burnside_sufficient_over(const std::vector<SubgroupSet>& minimal_normals) {
  std::vector<int> seen_primes;
  for (const auto& n : minimal_normals) {
    const auto ps = prime_divisors(n.order());
    if (ps.size() != 1) continue;  // not a prime-power order
    if (std::find(seen_primes.begin(), seen_primes.end(), ps[0]) != seen_primes.end())
      return false;
    seen_primes.push_back(ps[0]);
  }
  return true;
}

}  // namespace

bool burnside_sufficient(const FiniteGroup& g) {
  return burnside_sufficient_over(minimal_normal_subgroups(g));
}

bool kochendorffer_sufficient(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    SubgroupSet syl = sylow(g, p);
    std::vector<int> z;
    for (int a : syl.members()) {
      bool central = true;
      for (int b : syl.members())
        if (g.mul(a, b) != g.mul(b, a)) {
          central = false;
          break;
        }
      if (central) z.push_back(a);
    }
    if (!is_cyclic_group(SubgroupSet(g, std::move(z)))) return false;
  }
  return true;
}

std::optional<bool> fite_nilpotent(const FiniteGroup& g) {
  if (!is_nilpotent(g)) return std::nullopt;
  return is_cyclic_group(center(g));
}

CriterionReport verdict(const FiniteGroup& g, long long characteristic) {
  return verdict(g, characteristic, socle_report(g));
}

CriterionReport verdict(const FiniteGroup& g, long long characteristic, const SocleReport& socle) {
  if (characteristic < 0 ||
      (characteristic != 0 && !is_prime(static_cast<std::uint64_t>(characteristic))))
    fail(Err::ParseError, "characteristic must be 0 or a prime");
  CriterionReport r;
  r.characteristic = characteristic;
  r.primes = socle.primes;
  for (const auto& tp : socle.t_parts) {
    auto d = prime_detail(tp);
    r.gaschuetz = r.gaschuetz && d.gaschuetz;
    r.weisner = r.weisner && d.weisner;
    r.akizuki = r.akizuki && d.akizuki;
    r.per_prime.push_back(std::move(d));
  }
  const bool char_ok =
      characteristic == 0 ||
      std::find(r.primes.begin(), r.primes.end(), static_cast<int>(characteristic)) == r.primes.end();
  r.verdict = char_ok && r.weisner;
  r.burnside_sufficient = burnside_sufficient_over(socle.minimal_normals);
  r.kochendorffer_sufficient = kochendorffer_sufficient(g);
  r.is_nilpotent = is_nilpotent(g);
  r.center_cyclic = is_cyclic_group(center(g));
  if (r.is_nilpotent) r.fite = r.center_cyclic;
  return r;
}

}  // namespace fir
