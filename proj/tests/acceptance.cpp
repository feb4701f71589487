// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Time budgets are part of the criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "fir/builders.hpp"
#include "fir/chartable.hpp"
#include "fir/corpus.hpp"
#include "fir/criteria.hpp"
#include "fir/groupspec.hpp"
#include "fir/modrep.hpp"

using namespace fir;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::ostream&)> body;
};

bool expect(std::ostream& log, bool ok, const std::string& what) {
  if (!ok) log << " [" << what << " FAILED]";
  return ok;
}

std::multiset<long long> degree_multiset(const CharacterTable& t) {
  std::multiset<long long> d;
  for (const auto& row : t.rows) d.insert(row.degree);
  return d;
}

bool criterion_burnside(std::ostream& log) {
  AnalysisReport r = analyze_group(GroupSpec::parse("burnside"), 0, true);
  bool ok = true;
  ok &= expect(log, !r.criteria.verdict, "verdict false");
  ok &= expect(log, r.oracle && !r.oracle->faithful, "oracle confirms no faithful irreducible");
  log << " verdict=false oracle=false";
  return ok;
}

bool criterion_isaacs(std::ostream& log) {
  AnalysisReport r = analyze_group(GroupSpec::parse("isaacs"), 0, true);
  bool ok = true;
  ok &= expect(log, r.order == 48, "order 48");
  ok &= expect(log, !r.criteria.verdict, "verdict false");
  ok &= expect(log, r.oracle && !r.oracle->faithful, "oracle");
  std::vector<long long> expected{1, 1, 1, 3, 3, 3, 3, 3};
  ok &= expect(log, r.oracle && r.oracle->degrees == expected, "degree multiset");
  long long sq = 0;
  if (r.oracle)
    for (long long d : r.oracle->degrees) sq += d * d;
  ok &= expect(log, sq == 48, "sum of degree squares");
  log << " degrees={1,1,1,3,3,3,3,3}";
  return ok;
}

bool criterion_gdq_inventory(std::ostream& log) {
  bool ok = true;
  for (int q : {3, 4, 5})
    for (int d : {1, 2}) {
      const auto start = std::chrono::steady_clock::now();
      FiniteGroup g = affine_scalar_group(d, q);
      CharacterTable t = dixon_table(g);
      long long deg_q1 = 0, linear = 0, sq = 0;
      for (const auto& row : t.rows) {
        if (row.degree == q - 1) ++deg_q1;
        if (row.degree == 1) ++linear;
        sq += row.degree * row.degree;
      }
      long long qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      const std::string tag = "G(" + std::to_string(d) + "," + std::to_string(q) + ")";
      if (q == 2)
        continue;  // not part of the inventory
      // q-1 = 1 would merge the two counts; q >= 3 here keeps them disjoint.
      ok &= expect(log, deg_q1 == (qd - 1) / (q - 1), tag + " count of degree q-1");
      ok &= expect(log, linear == q - 1, tag + " linear count");
      ok &= expect(log, sq == qd * (q - 1), tag + " degree-square identity");
      ok &= expect(log, verdict(g, 0).verdict == (d == 1), tag + " verdict iff d=1");
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ok &= expect(log, secs < 5.0, tag + " under 5s");
    }
  log << " all (d,q) with q in {3,4,5}, d in {1,2}";
  return ok;
}

bool criterion_equivalence_sweep(std::ostream& log) {
  bool ok = true;
  int groups = 0;
  for (const auto& result : run_corpus(true, 1)) {
    ++groups;
    ok &= expect(log, result.violations.empty(), result.spec + " invariants");
    const auto& c = result.report.criteria;
    ok &= expect(log, c.gaschuetz == c.weisner && c.weisner == c.akizuki,
                 result.spec + " criteria equal");
    ok &= expect(log,
                 result.report.oracle && result.report.oracle->faithful == c.gaschuetz,
                 result.spec + " oracle agrees");
  }
  log << " " << groups << " groups, zero violations";
  return ok;
}

bool criterion_sufficiency(std::ostream& log) {
  bool ok = true;
  for (const auto& result : run_corpus(false, 1)) {
    const auto& c = result.report.criteria;
    const bool verdict0 = c.weisner;
    if (c.burnside_sufficient)
      ok &= expect(log, verdict0, result.spec + " burnside implies verdict");
    if (c.kochendorffer_sufficient)
      ok &= expect(log, verdict0, result.spec + " kochendorffer implies verdict");
  }
  // Strict non-converses.
  FiniteGroup diag = GroupSpec::parse("product:gq:3*gq:3").build();
  ok &= expect(log, verdict(diag, 0).verdict && !burnside_sufficient(diag),
               "diagonal group witnesses burnside strictness");
  FiniteGroup g4 = GroupSpec::parse("gq:4").build();
  ok &= expect(log, verdict(g4, 0).verdict && !kochendorffer_sufficient(g4),
               "G(4) witnesses kochendorffer strictness");
  log << " implications hold; both strict witnesses verified";
  return ok;
}

bool criterion_nilpotent(std::ostream& log) {
  bool ok = true;
  int nilpotent_count = 0;
  for (const std::string& spec : builtin_corpus()) {
    FiniteGroup g = GroupSpec::parse(spec).build();
    CriterionReport r = verdict(g, 0);
    if (!r.is_nilpotent) continue;
    ++nilpotent_count;
    ok &= expect(log, r.center_cyclic == r.verdict, spec + " center-cyclic iff verdict");
  }
  ok &= expect(log, nilpotent_count >= 15, "enough nilpotent groups in the corpus");
  log << " " << nilpotent_count << " nilpotent groups";
  return ok;
}

bool criterion_characteristic(std::ostream& log) {
  bool ok = true;
  for (const std::string& spec : builtin_corpus()) {
    FiniteGroup g = GroupSpec::parse(spec).build();
    CriterionReport base = verdict(g, 0);
    for (long long p : {2, 3, 5, 7}) {
      CriterionReport rp = verdict(g, p);
      const bool in_pi = std::find(base.primes.begin(), base.primes.end(),
                                   static_cast<int>(p)) != base.primes.end();
      ok &= expect(log, rp.verdict == (base.verdict && !in_pi),
                   spec + " char " + std::to_string(p));
    }
  }
  log << " verdict(G,p) = verdict(G,0) and p not in Pi, for p <= 7";
  return ok;
}

bool criterion_module_duality(std::ostream& log) {
  static FiniteGroup c2 = cyclic(2);
  static FiniteGroup c3 = cyclic(3);
  static FiniteGroup s3 = GroupSpec::parse("perm:(1 2 3);(1 2)").build();
  static FiniteGroup q8 = GroupSpec::parse("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)").build();

  auto trivial = [](const FiniteGroup& g, std::uint32_t p) {
    return FpModule::from_full_family(g, p, 1,
                                      std::vector<FpMatrix>(g.order(), FpMatrix::identity(p, 1)));
  };
  struct Irreducible {
    FpModule m;
    int r, g;
  };
  std::vector<std::vector<Irreducible>> catalogs;
  catalogs.push_back(
      {{trivial(c2, 3), 1, 1},
       {FpModule::from_generator_images(c2, 3, 1, {{1, FpMatrix(3, 1, 1, {2})}}), 1, 1}});
  catalogs.push_back(
      {{trivial(c3, 2), 1, 1},
       {FpModule::from_generator_images(c3, 2, 2, {{1, FpMatrix(2, 2, 2, {0, 1, 1, 1})}}), 2, 2}});
  {
    std::vector<std::pair<int, FpMatrix>> nat;
    for (int gen : s3.generators())
      nat.emplace_back(gen, s3.element_order(gen) == 3 ? FpMatrix(2, 2, 2, {0, 1, 1, 1})
                                                       : FpMatrix(2, 2, 2, {0, 1, 1, 0}));
    catalogs.push_back(
        {{trivial(s3, 2), 1, 1}, {FpModule::from_generator_images(s3, 2, 2, nat), 2, 1}});
  }
  {
    std::vector<std::pair<int, FpMatrix>> sl2{{q8.generators()[0], FpMatrix(3, 2, 2, {0, 2, 1, 0})},
                                              {q8.generators()[1], FpMatrix(3, 2, 2, {1, 1, 1, 2})}};
    catalogs.push_back(
        {{trivial(q8, 3), 1, 1}, {FpModule::from_generator_images(q8, 3, 2, sl2), 2, 1}});
  }

  bool ok = true;
  int family = 0;
  for (const auto& catalog : catalogs) {
    // All multiplicity pairs (a, b) of the two irreducibles with total dim <= 6.
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        if (a + b == 0) continue;
        const int dim = a * catalog[0].r + b * catalog[1].r;
        if (dim > 6) continue;
        FpModule m = [&] {
          std::vector<const FpModule*> parts;
          for (int i = 0; i < a; ++i) parts.push_back(&catalog[0].m);
          for (int i = 0; i < b; ++i) parts.push_back(&catalog[1].m);
          FpModule acc = *parts[0];
          for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, *parts[i]);
          return acc;
        }();
        ++family;
        const bool by_spin = is_cyclic_spin(m).cyclic;
        const bool by_formula = akizuki_cyclic(m);
        const bool dual_spin = is_cyclic_spin(dual_module(m)).cyclic;
        const bool expected =
            a * catalog[0].g <= catalog[0].r && b * catalog[1].g <= catalog[1].r;
        ok &= expect(log, by_spin == by_formula, "spin vs formula");
        ok &= expect(log, by_spin == dual_spin, "module vs dual");
        ok &= expect(log, by_spin == expected, "hand-computed multiplicity bound");
        ok &= expect(log, weisner_hyperplane_exists(m).exists == akizuki_cyclic(dual_module(m)),
                     "hyperplane search vs dual cyclicity");
      }
  }
  ok &= expect(log, family >= 50, "at least 50 modules");
  log << " " << family << " completely reducible modules";
  return ok;
}

bool criterion_oracle_consistency(std::ostream& log) {
  bool ok = true;
  for (const std::string& spec : builtin_corpus()) {
    FiniteGroup g = GroupSpec::parse(spec).build();
    CharacterTable t = dixon_table(g);
    ok &= expect(log, static_cast<int>(t.rows.size()) == t.classes.count(), spec + " rows=classes");
    long long sq = 0;
    for (const auto& row : t.rows) sq += row.degree * row.degree;
    ok &= expect(log, sq == g.order(), spec + " degree squares");
    ok &= expect(log, row_orthogonality_holds(g, t), spec + " orthogonality");
    SubgroupSet meet = SubgroupSet::whole(g);
    for (int row = 0; row < static_cast<int>(t.rows.size()); ++row) {
      SubgroupSet ker = kernel_of(g, t, row);
      if (!is_normal(g, ker)) {
        ok = expect(log, false, spec + " kernel normal");
        break;
      }
      meet = intersect(meet, ker);
    }
    ok &= expect(log, meet.order() == 1, spec + " kernel intersection trivial");
  }
  log << " all corpus groups";
  return ok;
}

bool criterion_tensor(std::ostream& log) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"cyclic:2", "cyclic:2"},
      {"cyclic:3", "cyclic:3"},
      {"gq:3", "gq:3"},
      {"cyclic:2", "perm:(1 2 3);(1 2)"},
      {"cyclic:6", "perm:(1 2 3);(1 2)"},
      {"perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)", "cyclic:3"},
  };
  bool ok = true;
  for (const auto& [a, b] : pairs) {
    FiniteGroup ga = GroupSpec::parse(a).build();
    FiniteGroup gb = GroupSpec::parse(b).build();
    FiniteGroup gp = GroupSpec::parse("product:" + a + "*" + b).build();
    auto da = degree_multiset(dixon_table(ga));
    auto db = degree_multiset(dixon_table(gb));
    std::multiset<long long> expected;
    for (long long x : da)
      for (long long y : db) expected.insert(x * y);
    ok &= expect(log, degree_multiset(dixon_table(gp)) == expected, "product " + a + " x " + b);
  }
  log << " " << pairs.size() << " direct products";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 burnside example rejected, oracle concurs", 1.0, criterion_burnside},
      {"2 isaacs example rejected, degrees {1,1,1,3,3,3,3,3}", 2.0, criterion_isaacs},
      {"3 G(d,q) character inventory and verdicts", 30.0, criterion_gdq_inventory},
      {"4 criteria equivalence sweep with oracle over the corpus", 60.0,
       criterion_equivalence_sweep},
      {"5 sufficient conditions imply, strict witnesses exist", 60.0, criterion_sufficiency},
      {"6 nilpotent groups: center cyclic iff verdict", 60.0, criterion_nilpotent},
      {"7 characteristic parameter behaviour for p <= 7", 120.0, criterion_characteristic},
      {"8 module family: spin = formula = dual, >= 50 modules", 60.0, criterion_module_duality},
      {"9 oracle self-consistency over the corpus", 60.0, criterion_oracle_consistency},
      {"10 tensor degrees for direct products", 60.0, criterion_tensor},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) {
      ok = false;
      log << " [over budget " << c.budget_seconds << "s]";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << ":" << log.str() << " ("
              << std::fixed;
    std::cout.precision(3);
    std::cout << secs << "s < " << c.budget_seconds << "s)\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
