#include "fir/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "fir/modrep.hpp"
#include "fir/socle.hpp"

namespace fir {

std::vector<std::string> builtin_corpus() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 12; ++n) specs.push_back("cyclic:" + std::to_string(n));
  specs.push_back("product:cyclic:2*cyclic:2");
  specs.push_back("product:cyclic:3*cyclic:3");
  specs.push_back("perm:(1 2 3);(1 2)");        // S_3
  specs.push_back("perm:(1 2 3 4);(1 2)");      // S_4
  specs.push_back("perm:(1 2 3);(2 3 4)");      // A_4
  specs.push_back("perm:(1 2 3 4 5);(3 4 5)");  // A_5
  specs.push_back("perm:(1 2);(3 4)");          // D_2
  specs.push_back("perm:(1 2 3);(2 3)");        // D_3
  specs.push_back("perm:(1 2 3 4);(2 4)");      // D_4
  specs.push_back("perm:(1 2 3 4 5);(2 5)(3 4)");      // D_5
  specs.push_back("perm:(1 2 3 4 5 6);(2 6)(3 5)");    // D_6
  specs.push_back("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)");  // Q_8
  specs.push_back("burnside");
  specs.push_back("isaacs");
  for (int q : {2, 3, 4, 5})
    for (int d : {1, 2}) specs.push_back("gdq:" + std::to_string(d) + "," + std::to_string(q));
  specs.push_back("gdq:3,2");
  specs.push_back("gdq:3,3");
  specs.push_back("product:gq:3*gq:3");  // diagonal group V semidirect T, d=2 q=3
  specs.push_back("product:cyclic:2*perm:(1 2 3);(1 2)");  // C_2 x S_3
  specs.push_back("product:cyclic:6*perm:(1 2 3);(1 2)");  // C_6 x S_3
  specs.push_back("product:perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)*cyclic:3");  // Q_8 x C_3
  return specs;
}

namespace {

void check(std::vector<std::string>& violations, bool ok, const std::string& what) {
  if (!ok) violations.push_back(what);
}

void check_group_invariants(const FiniteGroup& g, const AnalysisReport& report,
                            std::vector<std::string>& violations) {
  SocleReport socle = socle_report(g);

  // Lagrange for every subgroup the analysis produces.
  for (const auto& n : socle.minimal_normals)
    check(violations, g.order() % n.order() == 0, "lagrange: minimal normal subgroup");
  check(violations, g.order() % center(g).order() == 0, "lagrange: center");
  for (int p : prime_divisors(g.order()))
    check(violations, g.order() % sylow(g, p).order() == 0, "lagrange: sylow");

  // Socle structure: SR meets the product of the T_p trivially and together
  // they generate the socle.
  std::vector<int> t_seeds;
  for (const auto& tp : socle.t_parts)
    for (int x : tp.carrier.members()) t_seeds.push_back(x);
  SubgroupSet t_product = SubgroupSet::generated_by(g, t_seeds);
  check(violations, intersect(socle.sr, t_product).order() == 1, "socle: SR meets T(G)");
  std::vector<int> both = t_seeds;
  for (int x : socle.sr.members()) both.push_back(x);
  check(violations, SubgroupSet::generated_by(g, both) == socle.socle,
        "socle: SR and T(G) generate Soc(G)");

  for (const auto& tp : socle.t_parts) {
    // Coordinate map is a group isomorphism carrier -> F_p^d.
    bool additive = true;
    for (int x : tp.carrier.members())
      for (int y : tp.carrier.members()) {
        auto cx = tp.coords(x), cy = tp.coords(y);
        auto cxy = tp.coords(g.mul(x, y));
        for (int i = 0; i < tp.dim(); ++i)
          if ((cx[i] + cy[i]) % tp.p != cxy[i]) additive = false;
      }
    check(violations, additive, "socle: coordinate map not additive at p=" + std::to_string(tp.p));
    // Greedy decomposition dimensions sum to the carrier dimension.
    long long size = 1;
    for (int i = 0; i < tp.dim(); ++i) size *= tp.p;
    check(violations, size == tp.carrier.order(), "socle: basis does not span carrier");
  }

  // Criteria agree per prime and in aggregate.
  for (const auto& d : report.criteria.per_prime)
    check(violations, d.gaschuetz == d.weisner && d.weisner == d.akizuki,
          "criteria disagree at p=" + std::to_string(d.p));
  check(violations,
        report.criteria.gaschuetz == report.criteria.weisner &&
            report.criteria.weisner == report.criteria.akizuki,
        "aggregate criteria disagree");

  // Sufficient conditions imply the characteristic-0 verdict.
  const bool verdict0 = report.criteria.weisner;
  if (report.criteria.burnside_sufficient)
    check(violations, verdict0, "burnside condition did not imply the verdict");
  if (report.criteria.kochendorffer_sufficient)
    check(violations, verdict0, "kochendorffer condition did not imply the verdict");

  // Nilpotent groups: cyclic center is the whole story.
  if (report.criteria.is_nilpotent)
    check(violations, report.criteria.center_cyclic == verdict0,
          "nilpotent center-cyclic test disagrees with verdict");

  // Characteristic parameter: verdict(p) = verdict(0) and p not in Pi.
  for (long long p : {2, 3, 5, 7}) {
    CriterionReport rp = verdict(g, p);
    const bool in_pi =
        std::find(rp.primes.begin(), rp.primes.end(), static_cast<int>(p)) != rp.primes.end();
    check(violations, rp.verdict == (verdict0 && !in_pi),
          "characteristic monotonicity fails at p=" + std::to_string(p));
  }

  // Module-level duality on the T_p modules.
  for (const auto& tp : socle.t_parts) {
    const bool cyc = is_cyclic_spin(tp.module).cyclic;
    check(violations, is_cyclic_spin(dual_module(tp.module)).cyclic == cyc,
          "dual cyclicity differs at p=" + std::to_string(tp.p));
    check(violations, akizuki_cyclic(tp.module) == cyc,
          "akizuki route differs from spin route at p=" + std::to_string(tp.p));

    // Pure group-theoretic re-derivation, bypassing the linear algebra: the
    // module is cyclic iff some carrier element has the whole carrier as its
    // normal closure, and a hyperplane functional has trivial core iff the
    // matching index-p subgroup has trivial core under conjugate
    // intersections.
    bool closure_cyclic = false;
    for (int x : tp.carrier.members())
      if (x != 0 && normal_closure(g, x) == tp.carrier) {
        closure_cyclic = true;
        break;
      }
    check(violations, closure_cyclic == cyc,
          "normal-closure route differs from spin route at p=" + std::to_string(tp.p));

    auto hyp = weisner_hyperplane_exists(tp.module);
    if (hyp.functional) {
      std::vector<int> members;
      for (int x : tp.carrier.members()) {
        auto c = tp.coords(x);
        std::uint64_t val = 0;
        for (int i = 0; i < tp.dim(); ++i) val += static_cast<std::uint64_t>((*hyp.functional)[i]) * c[i];
        if (val % tp.p == 0) members.push_back(x);
      }
      SubgroupSet hyperplane(g, std::move(members));
      check(violations, core(g, hyperplane).order() == 1,
            "witness hyperplane has nontrivial core at p=" + std::to_string(tp.p));
    }
  }
}

void check_oracle_invariants(const FiniteGroup& g, const AnalysisReport& report,
                             std::vector<std::string>& violations) {
  CharacterTable t = dixon_table(g);
  check(violations, static_cast<int>(t.rows.size()) == t.classes.count(),
        "oracle: row count differs from class count");
  long long sq = 0;
  for (const auto& row : t.rows) sq += row.degree * row.degree;
  check(violations, sq == g.order(), "oracle: degree squares do not sum to |G|");
  check(violations, row_orthogonality_holds(g, t), "oracle: row orthogonality fails");
  check(violations, t.rows.size() > 0 && t.rows[0].degree == 1, "oracle: no trivial row first");
  for (int c = 0; c < t.classes.count(); ++c)
    check(violations, t.rows[0].mult[c][0] == 1, "oracle: first row is not the trivial character");

  SubgroupSet kernel_meet = SubgroupSet::whole(g);
  for (int row = 0; row < static_cast<int>(t.rows.size()); ++row) {
    SubgroupSet ker = kernel_of(g, t, row);
    check(violations, is_normal(g, ker),
          "oracle: kernel of row " + std::to_string(row) + " not normal");
    kernel_meet = intersect(kernel_meet, ker);
  }
  check(violations, kernel_meet.order() == 1, "oracle: intersection of kernels not trivial");

  check(violations, report.oracle && report.oracle->faithful == report.criteria.weisner,
        "oracle: faithful-exists differs from criteria verdict");
}

}  // namespace

GroupRunResult run_group(const std::string& spec_text, bool with_oracle, int order_cap) {
  GroupRunResult result;
  GroupSpec spec = GroupSpec::parse(spec_text);
  result.spec = spec.to_string();
  result.report = analyze_group(spec, 0, with_oracle, order_cap);
  FiniteGroup g = spec.build(order_cap);
  check_group_invariants(g, result.report, result.violations);
  if (with_oracle) check_oracle_invariants(g, result.report, result.violations);
  return result;
}

std::vector<GroupRunResult> run_corpus(bool with_oracle, int jobs, int order_cap) {
  const std::vector<std::string> specs = builtin_corpus();
  std::vector<GroupRunResult> results(specs.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        results[i] = run_group(specs[i], with_oracle, order_cap);
      } catch (const std::exception& e) {
        results[i].spec = specs[i];
        results[i].violations.push_back(std::string("exception: ") + e.what());
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const GroupRunResult& a, const GroupRunResult& b) { return a.spec < b.spec; });
  return results;
}

std::string corpus_matrix_text(const std::vector<GroupRunResult>& results) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.spec.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "group"
      << std::right << std::setw(6) << "order" << std::setw(5) << "|pi|" << std::setw(9)
      << "verdict" << std::setw(9) << "oracle" << std::setw(7) << "check" << "\n";
  int failures = 0;
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.spec << std::right
        << std::setw(6) << r.report.order << std::setw(5) << r.report.pi.size() << std::setw(9)
        << (r.report.criteria.verdict ? "yes" : "no") << std::setw(9)
        << (r.report.oracle ? (r.report.oracle->faithful ? "yes" : "no") : "-") << std::setw(7)
        << (r.violations.empty() ? "ok" : "FAIL") << "\n";
    if (!r.violations.empty()) {
      ++failures;
      for (const auto& v : r.violations) out << "    violation: " << v << "\n";
    }
  }
  out << (failures == 0 ? "all groups passed every invariant\n"
                        : std::to_string(failures) + " group(s) with violations\n");
  return out.str();
}

}  // namespace fir
