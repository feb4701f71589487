#include "fir/fplinalg.hpp"

#include <algorithm>
#include <string>

namespace fir {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(Err::Internal, "division by zero mod " + std::to_string(p));
  return pow_mod(a % p, p - 2, p);
}

static void check_prime(std::uint32_t p) {
  if (!is_prime(p)) fail(Err::ModulusMismatch, "modulus " + std::to_string(p) + " is not prime");
}

FpMatrix::FpMatrix(std::uint32_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  check_prime(p);
}

FpMatrix::FpMatrix(std::uint32_t p, int rows, int cols, std::vector<std::uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
  check_prime(p);
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    fail(Err::DimensionMismatch, "entry count does not match rows*cols");
  for (auto& x : a_) x %= p_;
}

FpMatrix FpMatrix::identity(std::uint32_t p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_) fail(Err::ModulusMismatch, "matrix product over different moduli");
  if (cols_ != o.rows_) fail(Err::DimensionMismatch, "matrix product shape mismatch");
  FpMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) = static_cast<std::uint32_t>((r(i, j) + x * o(k, j)) % p_);
    }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (p_ != o.p_) fail(Err::ModulusMismatch, "matrix sum over different moduli");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimensionMismatch, "matrix sum shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (r.a_[i] + o.a_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(Err::DimensionMismatch, "apply size mismatch");
  std::vector<std::uint32_t> r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < cols_; ++j) acc = (acc + static_cast<std::uint64_t>((*this)(i, j)) * v[j]) % p_;
    r[i] = static_cast<std::uint32_t>(acc);
  }
  return r;
}

int FpMatrix::multiplicative_order(int cap) const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "order of non-square matrix");
  FpMatrix acc = *this;
  for (int k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * *this;
  }
  fail(Err::Internal, "matrix order exceeds cap");
}

FpMatrix rref(FpMatrix m) {
  const std::uint32_t p = m.p();
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    const std::uint64_t s = inv_mod(m(lead, col), p);
    for (int j = 0; j < m.cols(); ++j)
      m(lead, j) = static_cast<std::uint32_t>(m(lead, j) * s % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col) == 0) continue;
      const std::uint64_t f = p - m(i, col);  // subtract f * pivot row
      for (int j = 0; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(lead, j)) % p);
    }
    ++lead;
  }
  return m;
}

int rank(const FpMatrix& m) {
  FpMatrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

FpSubspace FpSubspace::zero(std::uint32_t p, int ambient_dim) {
  FpSubspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = FpMatrix(p, 0, ambient_dim);
  return s;
}

FpSubspace FpSubspace::full(std::uint32_t p, int ambient_dim) {
  return from_matrix_rows(FpMatrix::identity(p, ambient_dim));
}

FpSubspace FpSubspace::from_matrix_rows(const FpMatrix& m) {
  FpMatrix r = rref(m);
  FpSubspace s;
  s.ambient_ = m.cols();
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < r.rows(); ++i) {
    int piv = -1;
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) break;  // RREF puts zero rows last
    s.pivots_.push_back(piv);
    for (int j = 0; j < r.cols(); ++j) rows.push_back(r(i, j));
  }
  s.basis_ = FpMatrix(m.p(), static_cast<int>(s.pivots_.size()), m.cols(), std::move(rows));
  return s;
}

FpSubspace FpSubspace::from_span(std::uint32_t p, int ambient_dim,
                                 const std::vector<std::vector<std::uint32_t>>& rows) {
  FpMatrix m(p, static_cast<int>(rows.size()), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != ambient_dim)
      fail(Err::DimensionMismatch, "span row has wrong length");
    for (int j = 0; j < ambient_dim; ++j) m(static_cast<int>(i), j) = rows[i][j] % p;
  }
  return from_matrix_rows(m);
}

std::vector<std::uint32_t> FpSubspace::reduce(std::vector<std::uint32_t> v) const {
  if (static_cast<int>(v.size()) != ambient_) fail(Err::DimensionMismatch, "reduce size mismatch");
  const std::uint32_t p = basis_.p();
  for (int i = 0; i < basis_.rows(); ++i) {
    const std::uint32_t c = v[pivots_[i]] % p;
    if (c == 0) continue;
    const std::uint64_t f = p - c;
    for (int j = 0; j < ambient_; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + f * basis_(i, j)) % p);
  }
  for (auto& x : v) x %= p;
  return v;
}

bool FpSubspace::contains(const std::vector<std::uint32_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  if (other.ambient_ != ambient_) fail(Err::DimensionMismatch, "contains: ambient mismatch");
  for (int i = 0; i < other.basis_.rows(); ++i) {
    std::vector<std::uint32_t> row(ambient_);
    for (int j = 0; j < ambient_; ++j) row[j] = other.basis_(i, j);
    if (!contains(row)) return false;
  }
  return true;
}

FpSubspace kernel(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const int n = m.cols();
  if (n == 0) return FpSubspace::zero(p, 0);
  if (m.rows() == 0) return FpSubspace::full(p, n);
  FpMatrix r = rref(m);
  std::vector<int> pivot_of_col(n, -1);
  int row = 0;
  for (int i = 0; i < r.rows(); ++i) {
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (r(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) break;
    pivot_of_col[piv] = row++;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (int f = 0; f < n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[f] = 1;
    for (int c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = (p - r(pivot_of_col[c], f)) % p;
    basis.push_back(std::move(v));
  }
  return FpSubspace::from_span(p, n, basis);
}

static void check_compatible(const FpSubspace& u, const FpSubspace& w) {
  if (u.p() != w.p()) fail(Err::ModulusMismatch, "subspaces over different moduli");
  if (u.ambient_dim() != w.ambient_dim()) fail(Err::DimensionMismatch, "subspaces in different ambient spaces");
}

FpSubspace sum(const FpSubspace& u, const FpSubspace& w) {
  check_compatible(u, w);
  FpMatrix stacked(u.p(), u.dim() + w.dim(), u.ambient_dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.ambient_dim(); ++j) stacked(i, j) = u.basis()(i, j);
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < u.ambient_dim(); ++j) stacked(u.dim() + i, j) = w.basis()(i, j);
  return FpSubspace::from_matrix_rows(stacked);
}

FpSubspace intersection(const FpSubspace& u, const FpSubspace& w) {
  check_compatible(u, w);
  // U = annihilator of ker(B_U); stack both kernels' constraints.
  FpSubspace ku = kernel(u.basis());
  FpSubspace kw = kernel(w.basis());
  FpMatrix stacked(u.p(), ku.dim() + kw.dim(), u.ambient_dim());
  for (int i = 0; i < ku.dim(); ++i)
    for (int j = 0; j < u.ambient_dim(); ++j) stacked(i, j) = ku.basis()(i, j);
  for (int i = 0; i < kw.dim(); ++i)
    for (int j = 0; j < u.ambient_dim(); ++j) stacked(ku.dim() + i, j) = kw.basis()(i, j);
  return kernel(stacked);
}

int quotient_dim(const FpSubspace& space, const FpSubspace& sub) {
  check_compatible(space, sub);
  if (!space.contains(sub)) fail(Err::DimensionMismatch, "quotient_dim: subspace not contained");
  return space.dim() - sub.dim();
}

CommutantSolution solve_commutant(const std::vector<FpMatrix>& a_family,
                                  const std::vector<FpMatrix>& b_family, int a_dim, int b_dim,
                                  std::uint32_t p) {
  if (a_family.size() != b_family.size())
    fail(Err::DimensionMismatch, "commutant: family lengths differ");
  for (const auto& m : a_family) {
    if (m.p() != p) fail(Err::ModulusMismatch, "commutant: modulus mismatch in A family");
    if (m.rows() != a_dim || m.cols() != a_dim) fail(Err::DimensionMismatch, "commutant: A not a_dim square");
  }
  for (const auto& m : b_family) {
    if (m.p() != p) fail(Err::ModulusMismatch, "commutant: modulus mismatch in B family");
    if (m.rows() != b_dim || m.cols() != b_dim) fail(Err::DimensionMismatch, "commutant: B not b_dim square");
  }
  const int unknowns = a_dim * b_dim;  // X[r][c] at index r*a_dim + c, X is b x a
  if (unknowns == 0) return {0, {}};
  const int t = static_cast<int>(a_family.size());
  FpMatrix sys(p, t * unknowns, unknowns);
  for (int ti = 0; ti < t; ++ti) {
    const FpMatrix& A = a_family[ti];
    const FpMatrix& B = b_family[ti];
    for (int r = 0; r < b_dim; ++r)
      for (int c = 0; c < a_dim; ++c) {
        const int row = ti * unknowns + r * a_dim + c;
        // (X A - B X)(r, c) = sum_k X[r][k] A[k][c] - sum_k B[r][k] X[k][c]
        for (int k = 0; k < a_dim; ++k)
          sys(row, r * a_dim + k) = (sys(row, r * a_dim + k) + A(k, c)) % p;
        for (int k = 0; k < b_dim; ++k)
          sys(row, k * a_dim + c) = (sys(row, k * a_dim + c) + p - B(r, k) % p) % p;
      }
  }
  FpSubspace sol = kernel(sys);
  CommutantSolution out;
  out.dim = sol.dim();
  for (int i = 0; i < sol.dim(); ++i) {
    FpMatrix x(p, b_dim, a_dim);
    for (int r = 0; r < b_dim; ++r)
      for (int c = 0; c < a_dim; ++c) x(r, c) = sol.basis()(i, r * a_dim + c);
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace fir
