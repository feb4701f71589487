#include "fir/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fir/fplinalg.hpp"

namespace fir {

ClassData class_data(const FiniteGroup& g) {
  const int n = g.order();
  ClassData cd;
  cd.class_of.assign(n, -1);
  std::vector<std::vector<int>> raw;
  for (int a = 0; a < n; ++a) {
    if (cd.class_of[a] >= 0) continue;
    std::vector<int> cls;
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      const int c = g.conj(x, a);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (int c : cls) cd.class_of[c] = 0;  // provisional mark
    raw.push_back(std::move(cls));
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  cd.classes = std::move(raw);
  for (int i = 0; i < cd.count(); ++i) {
    cd.representative.push_back(cd.classes[i][0]);
    for (int c : cd.classes[i]) cd.class_of[c] = i;
  }
  for (int i = 0; i < cd.count(); ++i)
    cd.inverse_class.push_back(cd.class_of[g.inv(cd.representative[i])]);
  return cd;
}

std::vector<std::vector<long long>> class_matrix(const FiniteGroup& g, const ClassData& cd,
                                                 int i) {
  const int k = cd.count();
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
  // a_{ijk} = #{(x,y) in C_i x C_j : x y = z_k}; for fixed z_k and x the
  // partner y = x^{-1} z_k is determined, so one pass over C_i per class.
  for (int kk = 0; kk < k; ++kk) {
    const int z = cd.representative[kk];
    for (int x : cd.classes[i]) {
      const int y = g.mul(g.inv(x), z);
      a[cd.class_of[y]][kk] += 1;
    }
  }
  return a;
}

namespace {

long long smallest_prime_1_mod(long long e, long long lower_bound) {
  for (long long ell = e + 1;; ell += e) {
    if (ell <= lower_bound) continue;
    if (is_prime(static_cast<std::uint64_t>(ell))) return ell;
    if (ell > (1ll << 31)) fail(Err::Internal, "no working prime found");
  }
}

long long primitive_root(long long ell) {
  std::vector<long long> prime_factors;
  long long m = ell - 1;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (long long r = 2; r < ell; ++r) {
    bool ok = true;
    for (long long q : prime_factors)
      if (pow_mod(static_cast<std::uint32_t>(r), static_cast<std::uint64_t>((ell - 1) / q),
                  static_cast<std::uint32_t>(ell)) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  fail(Err::Internal, "no primitive root");
}

// Characteristic polynomial of a square matrix over F_ell via Hessenberg
// reduction; coefficients ascending (c_0 + c_1 x + ... + x^m).
std::vector<std::uint32_t> char_poly(FpMatrix h) {
  const std::uint32_t p = h.p();
  const int m = h.rows();
  // Similarity reduction to upper Hessenberg form with pivoting.
  for (int j = 0; j + 2 < m; ++j) {
    int piv = -1;
    for (int i = j + 1; i < m; ++i)
      if (h(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < m; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (int r = 0; r < m; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const std::uint64_t inv = inv_mod(h(j + 1, j), p);
    for (int i = j + 2; i < m; ++i) {
      if (h(i, j) == 0) continue;
      const std::uint64_t f = h(i, j) * inv % p;  // row_i -= f * row_{j+1}
      for (int c = 0; c < m; ++c)
        h(i, c) = static_cast<std::uint32_t>((h(i, c) + (p - f) * h(j + 1, c)) % p);
      for (int r = 0; r < m; ++r)  // col_{j+1} += f * col_i
        h(r, j + 1) = static_cast<std::uint32_t>((h(r, j + 1) + f * h(r, i)) % p);
    }
  }
  // p_0 = 1, p_k = (x - h_{k-1,k-1}) p_{k-1}
  //             - sum_{i=1}^{k-1} h_{k-1-i,k-1} (prod_{j=1}^{i} h_{k-j,k-j-1}) p_{k-1-i}
  std::vector<std::vector<std::uint32_t>> polys{{1}};
  for (int k = 1; k <= m; ++k) {
    std::vector<std::uint32_t> pk(k + 1, 0);
    const auto& prev = polys[k - 1];
    // (x - h(k-1,k-1)) * prev
    for (int t = 0; t < k; ++t) {
      pk[t + 1] = (pk[t + 1] + prev[t]) % p;
      pk[t] = static_cast<std::uint32_t>(
          (pk[t] + static_cast<std::uint64_t>(p - h(k - 1, k - 1)) * prev[t]) % p);
    }
    std::uint64_t subdiag = 1;
    for (int i = 1; i <= k - 1; ++i) {
      subdiag = subdiag * h(k - i, k - i - 1) % p;
      if (subdiag == 0) break;
      const std::uint64_t coef = subdiag * h(k - 1 - i, k - 1) % p;
      if (coef == 0) continue;
      const auto& lower = polys[k - 1 - i];
      for (std::size_t t = 0; t < lower.size(); ++t)
        pk[t] = static_cast<std::uint32_t>((pk[t] + (p - coef) * lower[t]) % p);
    }
    polys.push_back(std::move(pk));
  }
  return polys[m];
}

std::vector<std::uint32_t> poly_roots(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (int t = static_cast<int>(poly.size()) - 1; t >= 0; --t) acc = (acc * x + poly[t]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// Restriction of a commuting operator to an invariant subspace, in the
// subspace's RREF coordinates.
FpMatrix restrict_to(const FpMatrix& a, const FpSubspace& v) {
  const int m = v.dim();
  FpMatrix r(a.p(), m, m);
  for (int i = 0; i < m; ++i) {
    std::vector<std::uint32_t> row(v.ambient_dim());
    for (int j = 0; j < v.ambient_dim(); ++j) row[j] = v.basis()(i, j);
    auto img = a.apply(row);
    if (!v.contains(img)) fail(Err::Internal, "eigen sweep: subspace not invariant");
    for (int j = 0; j < m; ++j) r(j, i) = img[v.pivots()[j]];
  }
  return r;
}

}  // namespace

CharacterTable dixon_table(const FiniteGroup& g, int oracle_cap) {
  const int n = g.order();
  if (n > oracle_cap)
    fail(Err::OracleCapExceeded,
         "group order " + std::to_string(n) + " exceeds oracle cap " + std::to_string(oracle_cap));
  CharacterTable t;
  t.classes = class_data(g);
  const int k = t.classes.count();
  t.exponent = g.exponent();
  const long long sqrt_bound = 2 * static_cast<long long>(std::ceil(std::sqrt(double(n))));
  t.ell = smallest_prime_1_mod(t.exponent, sqrt_bound);
  const auto ell = static_cast<std::uint32_t>(t.ell);
  t.zeta = pow_mod(static_cast<std::uint32_t>(primitive_root(t.ell)),
                   static_cast<std::uint64_t>((t.ell - 1) / t.exponent), ell);

  // Simultaneous eigenspaces of the class matrices over F_ell. The class
  // matrices commute and generate a split semisimple commutative algebra, so
  // sweeping them in index order splits the space into k lines.
  std::vector<FpSubspace> spaces{FpSubspace::full(ell, k)};
  for (int i = 0; i < k; ++i) {
    bool all_lines = true;
    for (const auto& v : spaces)
      if (v.dim() > 1) all_lines = false;
    if (all_lines) break;
    const auto am = class_matrix(g, t.classes, i);
    FpMatrix a(ell, k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) a(r, c) = static_cast<std::uint32_t>(am[r][c] % t.ell);
    std::vector<FpSubspace> next;
    for (const auto& v : spaces) {
      if (v.dim() <= 1) {
        next.push_back(v);
        continue;
      }
      FpMatrix r = restrict_to(a, v);
      int split_total = 0;
      for (std::uint32_t lambda : poly_roots(char_poly(r), ell)) {
        FpMatrix shifted = r;
        for (int d = 0; d < r.rows(); ++d)
          shifted(d, d) = (shifted(d, d) + ell - lambda) % ell;
        FpSubspace ker = kernel(shifted);
        if (ker.dim() == 0) continue;
        // Lift coordinates back to the ambient space.
        std::vector<std::vector<std::uint32_t>> lifted;
        for (int bi = 0; bi < ker.dim(); ++bi) {
          std::vector<std::uint32_t> w(k, 0);
          for (int j = 0; j < v.dim(); ++j) {
            const std::uint64_t c = ker.basis()(bi, j);
            if (c == 0) continue;
            for (int col = 0; col < k; ++col)
              w[col] = static_cast<std::uint32_t>((w[col] + c * v.basis()(j, col)) % ell);
          }
          lifted.push_back(std::move(w));
        }
        next.push_back(FpSubspace::from_span(ell, k, lifted));
        split_total += ker.dim();
      }
      if (split_total != v.dim()) fail(Err::Internal, "class matrix failed to diagonalize");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    fail(Err::Internal, "expected " + std::to_string(k) + " eigenlines, found " +
                            std::to_string(spaces.size()));

  // Each eigenline, normalized so the identity-class coordinate is 1, is a
  // central character omega_j = |C_j| chi(g_j) / chi(1) mod ell.
  const int id_class = t.classes.class_of[0];
  std::vector<std::vector<std::uint32_t>> omegas;
  for (const auto& line : spaces) {
    if (line.dim() != 1) fail(Err::Internal, "eigenspace is not a line");
    std::vector<std::uint32_t> u(k);
    for (int j = 0; j < k; ++j) u[j] = line.basis()(0, j);
    if (u[id_class] == 0) fail(Err::Internal, "central character vanishes at the identity");
    const std::uint64_t scale = inv_mod(u[id_class], ell);
    for (auto& x : u) x = static_cast<std::uint32_t>(x * scale % ell);
    omegas.push_back(std::move(u));
  }

  // Degrees: d^2 = |G| / sum_j omega_j omega_{j^-1} / |C_j| (mod ell), with d
  // the unique integer square root in [1, sqrt |G|].
  std::vector<std::uint32_t> inv_class_size(k);
  for (int j = 0; j < k; ++j)
    inv_class_size[j] = inv_mod(static_cast<std::uint32_t>(t.classes.classes[j].size() % t.ell), ell);
  for (const auto& u : omegas) {
    std::uint64_t s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + static_cast<std::uint64_t>(u[j]) * u[t.classes.inverse_class[j]] % ell *
                   inv_class_size[j]) %
          ell;
    if (s == 0) fail(Err::Internal, "degree recovery: zero norm");
    const std::uint64_t d2 = static_cast<std::uint64_t>(n % t.ell) * inv_mod(static_cast<std::uint32_t>(s), ell) % ell;
    long long degree = -1;
    for (long long d = 1; d * d <= n; ++d)
      if (static_cast<std::uint64_t>(d) * d % ell == d2) {
        degree = d;
        break;
      }
    if (degree < 0) fail(Err::Internal, "degree recovery failed");

    CharacterRow row;
    row.degree = degree;
    row.value_mod_ell.resize(k);
    for (int j = 0; j < k; ++j)
      row.value_mod_ell[j] =
          static_cast<long long>(static_cast<std::uint64_t>(u[j]) * (degree % t.ell) % ell *
                                 inv_class_size[j] % ell);

    // Multiplicity recovery: m_t(g) = e^{-1} sum_s chi(g^s) zeta^{-st} in
    // F_ell; each true multiplicity lies in [0, degree], degree < ell/2, so
    // the residue determines it.
    const long long e = t.exponent;
    std::vector<std::uint32_t> zeta_pow(e);
    zeta_pow[0] = 1;
    for (long long j = 1; j < e; ++j)
      zeta_pow[j] =
          static_cast<std::uint32_t>(static_cast<std::uint64_t>(zeta_pow[j - 1]) * t.zeta % ell);
    const std::uint64_t e_inv = inv_mod(static_cast<std::uint32_t>(e % t.ell), ell);
    row.mult.resize(k);
    for (int c = 0; c < k; ++c) {
      std::vector<std::uint32_t> powers(e);
      int x = 0;  // representative^s
      const int rep = t.classes.representative[c];
      for (long long s = 0; s < e; ++s) {
        powers[s] = static_cast<std::uint32_t>(row.value_mod_ell[t.classes.class_of[x]]);
        x = g.mul(x, rep);
      }
      row.mult[c].resize(e);
      long long total = 0;
      for (long long mt = 0; mt < e; ++mt) {
        std::uint64_t acc = 0;
        for (long long s = 0; s < e; ++s)
          acc = (acc + static_cast<std::uint64_t>(powers[s]) * zeta_pow[(e - mt * s % e) % e]) % ell;
        acc = acc * e_inv % ell;
        if (acc > static_cast<std::uint64_t>(degree))
          fail(Err::Internal, "multiplicity exceeds degree");
        row.mult[c][mt] = static_cast<int>(acc);
        total += static_cast<long long>(acc);
      }
      if (total != degree) fail(Err::Internal, "multiplicities do not sum to the degree");
    }
    t.rows.push_back(std::move(row));
  }

  // Order: degree ascending, then multiplicity sequences lexicographically
  // descending; puts the trivial character first.
  std::sort(t.rows.begin(), t.rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mult > b.mult;
  });

  long long sq = 0;
  for (const auto& row : t.rows) sq += row.degree * row.degree;
  if (sq != n) fail(Err::Internal, "degree squares do not sum to the group order");
  return t;
}

SubgroupSet kernel_of(const FiniteGroup& g, const CharacterTable& t, int row) {
  const CharacterRow& r = t.rows.at(row);
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (r.mult[t.classes.class_of[x]][0] == r.degree) members.push_back(x);
  return SubgroupSet(g, std::move(members));
}

FaithfulWitness faithful_irreducible_exists(const FiniteGroup& g, const CharacterTable& t) {
  for (int row = 0; row < static_cast<int>(t.rows.size()); ++row)
    if (kernel_of(g, t, row).order() == 1) return {true, row};
  return {false, -1};
}

bool row_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t) {
  const long long ell = t.ell;
  const int k = t.classes.count();
  for (std::size_t a = 0; a < t.rows.size(); ++a)
    for (std::size_t b = 0; b < t.rows.size(); ++b) {
      long long s = 0;
      for (int j = 0; j < k; ++j) {
        const long long size = static_cast<long long>(t.classes.classes[j].size()) % ell;
        s = (s + size * t.rows[a].value_mod_ell[j] % ell *
                     t.rows[b].value_mod_ell[t.classes.inverse_class[j]]) %
            ell;
      }
      const long long expect = (a == b) ? g.order() % ell : 0;
      if (s != expect) return false;
    }
  return true;
}

}  // namespace fir
