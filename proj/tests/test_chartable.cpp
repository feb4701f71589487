#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fir/builders.hpp"
#include "fir/chartable.hpp"
#include "fir/groupspec.hpp"

using namespace fir;

namespace {

FiniteGroup from_spec(const std::string& s) { return GroupSpec::parse(s).build(); }

std::vector<long long> degrees(const CharacterTable& t) {
  std::vector<long long> d;
  for (const auto& row : t.rows) d.push_back(row.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::multiset<long long> degree_multiset(const CharacterTable& t) {
  std::multiset<long long> d;
  for (const auto& row : t.rows) d.insert(row.degree);
  return d;
}

}  // namespace

TEST_CASE("class data: abelian groups split into singletons") {
  FiniteGroup c6 = cyclic(6);
  ClassData cd = class_data(c6);
  CHECK(cd.count() == 6);
  for (const auto& c : cd.classes) CHECK(c.size() == 1);
}

TEST_CASE("class data: S_3 has classes of sizes 1, 2, 3") {
  ClassData cd = class_data(from_spec("perm:(1 2 3);(1 2)"));
  REQUIRE(cd.count() == 3);
  CHECK(cd.classes[0].size() == 1);
  CHECK(cd.classes[1].size() == 2);
  CHECK(cd.classes[2].size() == 3);
}

TEST_CASE("class data: G(2,3) has 6 classes") {
  CHECK(class_data(affine_scalar_group(2, 3)).count() == 6);
}

TEST_CASE("structure constants satisfy the double-count identity") {
  for (const std::string& spec :
       {std::string("perm:(1 2 3);(1 2)"), std::string("burnside"), std::string("cyclic:8"),
        std::string("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)")}) {
    FiniteGroup g = from_spec(spec);
    ClassData cd = class_data(g);
    for (int i = 0; i < cd.count(); ++i) {
      auto a = class_matrix(g, cd, i);
      for (int j = 0; j < cd.count(); ++j) {
        long long total = 0;
        for (int k = 0; k < cd.count(); ++k)
          total += a[j][k] * static_cast<long long>(cd.classes[k].size());
        CHECK(total ==
              static_cast<long long>(cd.classes[i].size()) * static_cast<long long>(cd.classes[j].size()));
      }
    }
  }
}

TEST_CASE("dixon: C_3 gives the three cube-root characters") {
  CharacterTable t = dixon_table(cyclic(3));
  REQUIRE(t.rows.size() == 3);
  CHECK(degrees(t) == std::vector<long long>{1, 1, 1});
  // First row trivial; the other two are the two nontrivial linear characters
  // (multiplicity vectors concentrated on a primitive cube root).
  for (int c = 0; c < 3; ++c) CHECK(t.rows[0].mult[c][0] == 1);
  std::multiset<std::vector<std::vector<int>>> values{t.rows[1].mult, t.rows[2].mult};
  // Classes are ordered by representative 0, 1, 2; generators map to zeta or zeta^2.
  std::vector<std::vector<int>> chi1{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<int>> chi2{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  CHECK(values == std::multiset<std::vector<std::vector<int>>>{chi1, chi2});
}

TEST_CASE("dixon: degree multisets of the affine families and named examples") {
  CHECK(degrees(dixon_table(affine_scalar_group(2, 3))) ==
        std::vector<long long>{1, 1, 2, 2, 2, 2});
  CHECK(degrees(dixon_table(affine_scalar_group(2, 4))) ==
        std::vector<long long>{1, 1, 1, 3, 3, 3, 3, 3});
  CHECK(degrees(dixon_table(burnside_example())) == std::vector<long long>{1, 1, 2, 2, 2, 2});
  CHECK(degrees(dixon_table(isaacs_example())) == std::vector<long long>{1, 1, 1, 3, 3, 3, 3, 3});
}

TEST_CASE("dixon: A_5") {
  CharacterTable t = dixon_table(from_spec("perm:(1 2 3 4 5);(3 4 5)"));
  CHECK(degrees(t) == std::vector<long long>{1, 3, 3, 4, 5});
}

TEST_CASE("kernels: trivial character, hyperplane kernels, faithful row") {
  FiniteGroup g23 = affine_scalar_group(2, 3);
  CharacterTable t = dixon_table(g23);
  CHECK(kernel_of(g23, t, 0).order() == 18);  // trivial character
  for (int row = 0; row < static_cast<int>(t.rows.size()); ++row)
    if (t.rows[row].degree == 2) CHECK(kernel_of(g23, t, row).order() == 3);

  FiniteGroup g5 = affine_scalar_group(1, 5);
  CharacterTable t5 = dixon_table(g5);
  bool found_deg4_faithful = false;
  for (int row = 0; row < static_cast<int>(t5.rows.size()); ++row)
    if (t5.rows[row].degree == 4 && kernel_of(g5, t5, row).order() == 1)
      found_deg4_faithful = true;
  CHECK(found_deg4_faithful);
}

TEST_CASE("faithful_irreducible_exists on the named examples") {
  auto exists = [](const FiniteGroup& g) {
    CharacterTable t = dixon_table(g);
    return faithful_irreducible_exists(g, t).exists;
  };
  CHECK_FALSE(exists(burnside_example()));
  CHECK_FALSE(exists(isaacs_example()));
  CHECK(exists(from_spec("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)")));  // Q_8
  for (int q : {3, 4, 5}) CHECK(exists(affine_scalar_group(1, q)));
  CHECK_FALSE(exists(affine_scalar_group(2, 3)));
  CHECK_FALSE(exists(affine_scalar_group(2, 4)));
  CHECK_FALSE(exists(affine_scalar_group(3, 3)));
}

TEST_CASE("oracle self-consistency on a sample") {
  for (const std::string& spec :
       {std::string("perm:(1 2 3 4);(1 2)"), std::string("burnside"), std::string("cyclic:12"),
        std::string("gdq:2,4"), std::string("perm:(1 2 3 4 5);(3 4 5)")}) {
    FiniteGroup g = from_spec(spec);
    CharacterTable t = dixon_table(g);
    CAPTURE(spec);
    CHECK(static_cast<int>(t.rows.size()) == t.classes.count());
    long long sq = 0;
    for (const auto& row : t.rows) sq += row.degree * row.degree;
    CHECK(sq == g.order());
    CHECK(row_orthogonality_holds(g, t));
    for (const auto& row : t.rows)
      for (int c = 0; c < t.classes.count(); ++c) {
        long long total = 0;
        for (int m : row.mult[c]) total += m;
        CHECK(total == row.degree);
      }
    SubgroupSet meet = SubgroupSet::whole(g);
    for (int row = 0; row < static_cast<int>(t.rows.size()); ++row) {
      SubgroupSet ker = kernel_of(g, t, row);
      CHECK(is_normal(g, ker));
      meet = intersect(meet, ker);
    }
    CHECK(meet.order() == 1);
  }
}

TEST_CASE("tensor property: product degrees are pairwise products") {
  auto check_product = [](const std::string& a, const std::string& b) {
    FiniteGroup ga = from_spec(a), gb = from_spec(b);
    FiniteGroup gp = from_spec("product:" + a + "*" + b);
    auto da = degree_multiset(dixon_table(ga));
    auto db = degree_multiset(dixon_table(gb));
    std::multiset<long long> expected;
    for (long long x : da)
      for (long long y : db) expected.insert(x * y);
    CHECK(degree_multiset(dixon_table(gp)) == expected);
  };
  check_product("cyclic:2", "gq:3");
  check_product("cyclic:2", "cyclic:3");
  check_product("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)", "cyclic:3");
}

TEST_CASE("exact multiplicity vectors: S_3 standard character") {
  FiniteGroup s3 = from_spec("perm:(1 2 3);(1 2)");
  CharacterTable t = dixon_table(s3);  // e = 6, classes: identity, 3-cycles, transpositions
  REQUIRE(t.rows.size() == 3);
  const CharacterRow& std_char = t.rows[2];
  REQUIRE(std_char.degree == 2);
  CHECK(std_char.mult[0] == std::vector<int>{2, 0, 0, 0, 0, 0});  // 1 + 1
  CHECK(std_char.mult[1] == std::vector<int>{0, 0, 1, 0, 1, 0});  // omega + omega^2 = -1
  CHECK(std_char.mult[2] == std::vector<int>{1, 0, 0, 1, 0, 0});  // 1 + (-1) = 0
}

TEST_CASE("exact multiplicity vectors: the quaternion character of Q_8") {
  FiniteGroup q8 = from_spec("perm:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)");
  CharacterTable t = dixon_table(q8);  // e = 4; classes 1, -1, i, j, k
  REQUIRE(t.rows.size() == 5);
  const CharacterRow& quat = t.rows[4];
  REQUIRE(quat.degree == 2);
  for (int c = 0; c < 5; ++c) {
    const int rep_order = q8.element_order(t.classes.representative[c]);
    if (rep_order == 1) CHECK(quat.mult[c] == std::vector<int>{2, 0, 0, 0});        // 2
    if (rep_order == 2) CHECK(quat.mult[c] == std::vector<int>{0, 0, 2, 0});        // -2
    if (rep_order == 4) CHECK(quat.mult[c] == std::vector<int>{0, 1, 0, 1});        // i + (-i) = 0
  }
  CHECK(kernel_of(q8, t, 4).order() == 1);
}

TEST_CASE("multiplicity vectors reconstruct the mod-ell values") {
  for (const std::string& spec :
       {std::string("gdq:2,3"), std::string("perm:(1 2 3 4);(1 2)"), std::string("cyclic:12")}) {
    FiniteGroup g = from_spec(spec);
    CharacterTable t = dixon_table(g);
    for (const auto& row : t.rows)
      for (int c = 0; c < t.classes.count(); ++c) {
        long long acc = 0, zpow = 1;
        for (long long m : row.mult[c]) {
          acc = (acc + m % t.ell * zpow) % t.ell;
          zpow = zpow * t.zeta % t.ell;
        }
        CHECK(acc == row.value_mod_ell[c]);
      }
  }
}

TEST_CASE("named examples agree with their affine counterparts") {
  // Order, verdict and degree multiset; full isomorphism testing is out of
  // scope, so these proxies are what we pin down.
  auto agree = [](const FiniteGroup& a, const FiniteGroup& b) {
    CHECK(a.order() == b.order());
    CHECK(degree_multiset(dixon_table(a)) == degree_multiset(dixon_table(b)));
    CharacterTable ta = dixon_table(a), tb = dixon_table(b);
    CHECK(faithful_irreducible_exists(a, ta).exists == faithful_irreducible_exists(b, tb).exists);
  };
  agree(burnside_example(), affine_scalar_group(2, 3));
  agree(isaacs_example(), affine_scalar_group(2, 4));
}

TEST_CASE("ctable of C_4: four linear characters") {
  CharacterTable t = dixon_table(cyclic(4));
  CHECK(degrees(t) == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_WITH_AS(dixon_table(cyclic(12), 10), doctest::Contains("OracleCapExceeded"), Error);
}
