#include "fir/builders.hpp"

#include <algorithm>
#include <string>

namespace fir {

namespace {

// Polynomials over F_p as little-endian coefficient vectors.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m is monic of degree deg (coefficients m[0..deg-1] for x^0..x^{deg-1}).
  const int deg = static_cast<int>(m.size());
  for (int i = static_cast<int>(a.size()) - 1; i >= deg; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    a[i] = 0;
    for (int j = 0; j < deg; ++j) a[i - deg + j] = ((a[i - deg + j] - c * m[j]) % p + p * p) % p;
  }
  a.resize(deg);
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

// Divisibility of monic-or-not polynomials over F_p (dense, tiny degrees).
bool poly_divides(const std::vector<int>& d, std::vector<int> a, int p) {
  int dd = static_cast<int>(d.size()) - 1;
  while (dd >= 0 && d[dd] == 0) --dd;
  if (dd < 0) return false;
  const int lead_inv = [&] {
    int x = d[dd] % p, r = 1;
    for (int k = 0; k < p - 2; ++k) r = r * x % p;
    return r;
  }();
  int ad = static_cast<int>(a.size()) - 1;
  while (ad >= 0 && a[ad] == 0) --ad;
  while (ad >= dd) {
    const int c = a[ad] * lead_inv % p;
    for (int j = 0; j <= dd; ++j) a[ad - dd + j] = ((a[ad - dd + j] - c * d[j]) % p + p * p) % p;
    while (ad >= 0 && a[ad] == 0) --ad;
  }
  return ad < 0;
}

bool poly_irreducible(const std::vector<int>& m, int p) {
  // m: modulus coefficients (x^0..x^{e-1}) of a monic degree-e polynomial.
  const int e = static_cast<int>(m.size());
  std::vector<int> full = m;
  full.push_back(1);
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int deg = 1; 2 * deg <= e; ++deg) {
    std::vector<int> div(deg + 1, 0);
    div[deg] = 1;
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      for (int i = 0; i < deg; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      if (poly_divides(div, full, p)) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField GaloisField::make(int q) {
  if (q < 2) fail(Err::NotPrimePower, std::to_string(q));
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself prime
  int e = 0, n = q;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) fail(Err::NotPrimePower, std::to_string(q));
  GaloisField f;
  f.p = p;
  f.e = e;
  f.q = q;
  // Lexicographically smallest monic irreducible of degree e, coefficient
  // tuples (c_0, ..., c_{e-1}) enumerated in ascending code order.
  for (int code = 0;; ++code) {
    if (code >= q) fail(Err::Internal, "no irreducible polynomial found");
    std::vector<int> m(e);
    int c = code;
    for (int i = 0; i < e; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (poly_irreducible(m, p)) {
      f.modulus = std::move(m);
      break;
    }
  }
  return f;
}

int GaloisField::coeff(int a, int i) const {
  for (int k = 0; k < i; ++k) a /= p;
  return a % p;
}

int GaloisField::add(int a, int b) const {
  int r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += (coeff(a, i) + coeff(b, i)) % p * mult;
    mult *= p;
  }
  return r;
}

int GaloisField::neg(int a) const {
  int r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += (p - coeff(a, i)) % p * mult;
    mult *= p;
  }
  return r;
}

int GaloisField::mul(int a, int b) const {
  std::vector<int> va(e), vb(e);
  for (int i = 0; i < e; ++i) {
    va[i] = coeff(a, i);
    vb[i] = coeff(b, i);
  }
  auto prod = poly_mul_mod(va, vb, modulus, p);
  int r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += prod[i] * mult;
    mult *= p;
  }
  return r;
}

FiniteGroup cyclic(int n) {
  if (n < 1) fail(Err::ParseError, "cyclic group order must be >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_valid_table(std::move(flat), n);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order(), m = h.order(), nm = n * m;
  std::vector<int> flat(static_cast<std::size_t>(nm) * nm);
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < m; ++b2) {
          const int x = a1 * m + b1, y = a2 * m + b2;
          flat[static_cast<std::size_t>(x) * nm + y] = g.mul(a1, a2) * m + h.mul(b1, b2);
        }
  return FiniteGroup::from_valid_table(std::move(flat), nm);
}

FiniteGroup semidirect_vector(std::uint32_t p, int d, const FiniteGroup& h,
                              const std::vector<std::pair<int, FpMatrix>>& generator_actions,
                              int cap) {
  if (!is_prime(p)) fail(Err::InvalidAction, "vector part needs a prime modulus");
  long long v_count = 1;
  for (int i = 0; i < d; ++i) {
    v_count *= p;
    if (v_count * h.order() > cap)
      fail(Err::OrderCapExceeded, "semidirect product exceeds order cap");
  }
  // Assign a matrix to every element of H by breadth-first products over the
  // given generators, then validate the whole map as a homomorphism.
  std::vector<FpMatrix> act(h.order());
  std::vector<char> assigned(h.order(), 0);
  act[0] = FpMatrix::identity(p, d);
  assigned[0] = 1;
  for (const auto& [gen, m] : generator_actions) {
    if (gen < 0 || gen >= h.order()) fail(Err::InvalidAction, "generator index out of range");
    if (m.p() != p || m.rows() != d || m.cols() != d)
      fail(Err::InvalidAction, "action matrix has wrong shape or modulus");
    if (rank(m) != d) fail(Err::InvalidAction, "action matrix is singular");
  }
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> fresh;
    for (int x : frontier)
      for (const auto& [gen, m] : generator_actions) {
        const int y = h.mul(x, gen);
        if (!assigned[y]) {
          act[y] = act[x] * m;
          assigned[y] = 1;
          fresh.push_back(y);
        }
      }
    frontier = std::move(fresh);
  }
  for (int x = 0; x < h.order(); ++x)
    if (!assigned[x]) fail(Err::InvalidAction, "given elements do not generate the acting group");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (!(act[a] * act[b] == act[h.mul(a, b)]))
        fail(Err::InvalidAction, "action is not a homomorphism");

  const int vn = static_cast<int>(v_count);
  const int n = vn * h.order();
  auto coords = [&](int iv) {
    std::vector<std::uint32_t> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<std::uint32_t>(iv % p);
      iv /= static_cast<int>(p);
    }
    return v;
  };
  auto index_of = [&](const std::vector<std::uint32_t>& v) {
    int iv = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
      iv += static_cast<int>(v[i] % p) * mult;
      mult *= static_cast<int>(p);
    }
    return iv;
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  const int hn = h.order();
  for (int iv1 = 0; iv1 < vn; ++iv1)
    for (int h1 = 0; h1 < hn; ++h1) {
      const int x = iv1 * hn + h1;
      for (int iv2 = 0; iv2 < vn; ++iv2) {
        auto moved = act[h1].apply(coords(iv2));
        auto v1 = coords(iv1);
        for (int i = 0; i < d; ++i) moved[i] = (moved[i] + v1[i]) % p;
        const int iv = index_of(moved);
        for (int h2 = 0; h2 < hn; ++h2)
          flat[static_cast<std::size_t>(x) * n + iv2 * hn + h2] = iv * hn + h.mul(h1, h2);
      }
    }
  return FiniteGroup::from_valid_table(std::move(flat), n);
}

FiniteGroup affine_scalar_group(int d, int q, int cap) {
  if (d < 1) fail(Err::ParseError, "dimension must be >= 1");
  GaloisField f = GaloisField::make(q);
  long long v_count = 1;
  for (int i = 0; i < d; ++i) {
    v_count *= q;
    if (v_count * (q - 1) > cap) fail(Err::OrderCapExceeded, "G(d,q) exceeds order cap");
  }
  const int vn = static_cast<int>(v_count);
  const int un = q - 1;  // multiplicative part; element code a+1 for index a
  const int n = vn * std::max(un, 1);
  auto vec_of = [&](int iv) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = iv % q;
      iv /= q;
    }
    return v;
  };
  auto index_of = [&](const std::vector<int>& v) {
    int iv = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
      iv += v[i] * mult;
      mult *= q;
    }
    return iv;
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int iv1 = 0; iv1 < vn; ++iv1)
    for (int a1 = 0; a1 < un; ++a1) {
      const int x = iv1 * un + a1;
      const int s1 = a1 + 1;  // field code of the scalar
      const auto v1 = vec_of(iv1);
      for (int iv2 = 0; iv2 < vn; ++iv2) {
        auto v2 = vec_of(iv2);
        std::vector<int> moved(d);
        for (int i = 0; i < d; ++i) moved[i] = f.add(v1[i], f.mul(s1, v2[i]));
        const int iv = index_of(moved);
        for (int a2 = 0; a2 < un; ++a2) {
          const int s = f.mul(s1, a2 + 1);
          flat[static_cast<std::size_t>(x) * n + iv2 * un + a2] = iv * un + (s - 1);
        }
      }
    }
  return FiniteGroup::from_valid_table(std::move(flat), n);
}

FiniteGroup burnside_example() {
  FpMatrix inv33(3, 2, 2, {2, 0, 0, 2});
  return semidirect_vector(3, 2, cyclic(2), {{1, inv33}});
}

FiniteGroup isaacs_example() {
  // Multiplication by a generator of F_4^* on F_4^2 = F_2^4, block companion
  // matrices of x^2 + x + 1.
  FpMatrix a(2, 4, 4, {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1});
  return semidirect_vector(2, 4, cyclic(3), {{1, a}});
}

}  // namespace fir
