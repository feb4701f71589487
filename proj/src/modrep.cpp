#include "fir/modrep.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fir {

namespace {

std::uint64_t checked_pow(std::uint32_t p, int dim, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < dim; ++i) {
    size *= p;
    if (size > cap)
      fail(Err::SearchCapExceeded,
           "enumeration space " + std::to_string(p) + "^" + std::to_string(dim) +
               " exceeds cap " + std::to_string(cap));
  }
  return size;
}

}  // namespace

std::vector<std::uint32_t> vector_from_code(std::uint64_t code, std::uint32_t p, int dim) {
  // v_0 is the most significant digit, so ascending codes are in
  // lexicographic order on (v_0, ..., v_{dim-1}).
  std::vector<std::uint32_t> v(dim);
  for (int i = dim - 1; i >= 0; --i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

FpModule FpModule::from_full_family(const FiniteGroup& g, std::uint32_t p, int dim,
                                    std::vector<FpMatrix> act) {
  if (static_cast<int>(act.size()) != g.order())
    fail(Err::DimensionMismatch, "need one action matrix per group element");
  for (const auto& m : act)
    if (m.p() != p || m.rows() != dim || m.cols() != dim)
      fail(Err::DimensionMismatch, "action matrix has wrong shape or modulus");
  if (!act[0].is_identity()) fail(Err::InvalidAction, "identity must act trivially");
  FpModule mod;
  mod.group_ = &g;
  mod.p_ = p;
  mod.dim_ = dim;
  mod.act_ = std::move(act);
  if (g.order() <= kAssocValidationCap) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (!(mod.act_[a] * mod.act_[b] == mod.act_[g.mul(a, b)]))
          fail(Err::InvalidAction, "action is not a homomorphism");
  } else {
    for (int a = 0; a < g.order(); ++a)
      for (int h : g.generators())
        if (!(mod.act_[a] * mod.act_[h] == mod.act_[g.mul(a, h)]))
          fail(Err::InvalidAction, "action is not a homomorphism");
  }
  return mod;
}

FpModule FpModule::from_generator_images(const FiniteGroup& g, std::uint32_t p, int dim,
                                         const std::vector<std::pair<int, FpMatrix>>& images) {
  std::vector<FpMatrix> act(g.order());
  std::vector<char> assigned(g.order(), 0);
  act[0] = FpMatrix::identity(p, dim);
  assigned[0] = 1;
  for (const auto& [gen, m] : images) {
    if (gen < 0 || gen >= g.order()) fail(Err::InvalidAction, "generator index out of range");
    if (m.p() != p || m.rows() != dim || m.cols() != dim)
      fail(Err::InvalidAction, "image matrix has wrong shape or modulus");
  }
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> fresh;
    for (int x : frontier)
      for (const auto& [gen, m] : images) {
        const int y = g.mul(x, gen);
        if (!assigned[y]) {
          act[y] = act[x] * m;
          assigned[y] = 1;
          fresh.push_back(y);
        }
      }
    frontier = std::move(fresh);
  }
  for (int x = 0; x < g.order(); ++x)
    if (!assigned[x]) fail(Err::InvalidAction, "images do not generate the group");
  return from_full_family(g, p, dim, std::move(act));
}

std::vector<FpMatrix> FpModule::generator_actions() const {
  std::vector<FpMatrix> out;
  for (int g : group_->generators()) out.push_back(act_[g]);
  return out;
}

FpModule dual_module(const FpModule& m) {
  std::vector<FpMatrix> act;
  act.reserve(m.group().order());
  for (int g = 0; g < m.group().order(); ++g)
    act.push_back(m.action(m.group().inv(g)).transposed());
  return FpModule::from_full_family(m.group(), m.p(), m.dim(), std::move(act));
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
  if (&a.group() != &b.group()) fail(Err::Internal, "direct sum over different groups");
  if (a.p() != b.p()) fail(Err::ModulusMismatch, "direct sum over different moduli");
  const int d = a.dim() + b.dim();
  std::vector<FpMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) {
    FpMatrix m(a.p(), d, d);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) m(i, j) = a.action(g)(i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.action(g)(i, j);
    act.push_back(std::move(m));
  }
  return FpModule::from_full_family(a.group(), a.p(), d, std::move(act));
}

FpSubspace spin(const FpModule& m, const std::vector<std::uint32_t>& v) {
  if (static_cast<int>(v.size()) != m.dim()) fail(Err::DimensionMismatch, "spin vector size");
  FpSubspace space = FpSubspace::zero(m.p(), m.dim());
  auto gens = m.generator_actions();
  std::vector<std::vector<std::uint32_t>> queue;
  auto try_add = [&](const std::vector<std::uint32_t>& w) {
    if (space.contains(w)) return;
    space = sum(space, FpSubspace::from_span(m.p(), m.dim(), {w}));
    queue.push_back(w);
  };
  bool zero = std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
  if (!zero) try_add(v);
  while (!queue.empty()) {
    auto w = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : gens) try_add(a.apply(w));
  }
  return space;
}

CyclicSearch is_cyclic_spin(const FpModule& m, std::uint64_t cap) {
  if (m.dim() == 0) return {true, std::vector<std::uint32_t>{}};
  const std::uint64_t size = checked_pow(m.p(), m.dim(), cap);
  for (std::uint64_t code = 1; code < size; ++code) {
    auto v = vector_from_code(code, m.p(), m.dim());
    if (spin(m, v).dim() == m.dim()) return {true, std::move(v)};
  }
  return {false, std::nullopt};
}

namespace {

// Action matrices of `elements` restricted to the invariant subspace W.
std::vector<FpMatrix> restrict_action(const FpModule& m, const FpSubspace& w,
                                      const std::vector<FpMatrix>& family) {
  const int k = w.dim();
  std::vector<FpMatrix> out;
  out.reserve(family.size());
  for (const auto& a : family) {
    FpMatrix r(m.p(), k, k);
    for (int i = 0; i < k; ++i) {
      std::vector<std::uint32_t> basis_row(w.ambient_dim());
      for (int j = 0; j < w.ambient_dim(); ++j) basis_row[j] = w.basis()(i, j);
      auto img = a.apply(basis_row);
      // RREF basis: coordinates can be read off at the pivot columns.
      for (int j = 0; j < k; ++j) r(j, i) = img[w.pivots()[j]];
      if (!w.contains(img)) fail(Err::Internal, "subspace is not action-invariant");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

IsotypicSummary decompose(const FpModule& m, std::uint64_t cap) {
  const int d = m.dim();
  IsotypicSummary summary;
  if (d == 0) return summary;
  const std::uint64_t size = checked_pow(m.p(), d, cap);
  const auto gen_actions = m.generator_actions();
  FpSubspace removed = FpSubspace::zero(m.p(), d);
  while (removed.dim() < d) {
    // Exhaustive minimal-dimension spin over vectors outside the part
    // already accounted for; deterministic first minimizer.
    FpSubspace best;
    int best_dim = std::numeric_limits<int>::max();
    for (std::uint64_t code = 1; code < size; ++code) {
      auto v = vector_from_code(code, m.p(), d);
      if (removed.contains(v)) continue;
      FpSubspace s = spin(m, v);
      if (s.dim() < best_dim) {
        best_dim = s.dim();
        best = std::move(s);
        if (best_dim == 1) break;
      }
    }
    const FpSubspace& w = best;
    const int r = w.dim();
    auto w_actions = restrict_action(m, w, gen_actions);
    const int g_dim = solve_commutant(w_actions, w_actions, r, r, m.p()).dim;
    if (g_dim <= 0) fail(Err::Internal, "endomorphism ring of an irreducible is zero");
    if (r % g_dim != 0)
      fail(Err::NotCompletelyReducible,
           "candidate component dimension not divisible by its endomorphism field");
    auto hom = solve_commutant(w_actions, gen_actions, r, d, m.p());
    if (hom.dim % g_dim != 0)
      fail(Err::NotCompletelyReducible, "Hom dimension not divisible by End dimension");
    const int s = hom.dim / g_dim;
    // Isotypic component: sum of the images of a Hom basis.
    std::vector<std::vector<std::uint32_t>> image_rows;
    for (const auto& x : hom.basis)
      for (int c = 0; c < r; ++c) {
        std::vector<std::uint32_t> col(d);
        for (int i = 0; i < d; ++i) col[i] = x(i, c);
        image_rows.push_back(std::move(col));
      }
    FpSubspace isotypic = FpSubspace::from_span(m.p(), d, image_rows);
    if (isotypic.dim() != s * r)
      fail(Err::NotCompletelyReducible, "isotypic component has unexpected dimension");
    summary.components.push_back({w, r, g_dim, s});
    removed = sum(removed, isotypic);
  }
  int total = 0;
  for (const auto& c : summary.components) total += c.s * c.r;
  if (total != d) fail(Err::NotCompletelyReducible, "component dimensions do not sum to dim");
  return summary;
}

bool akizuki_cyclic(const FpModule& m, std::uint64_t cap) {
  for (const auto& c : decompose(m, cap).components)
    if (c.s * c.g > c.r) return false;
  return true;
}

FpSubspace largest_submodule_in_kernel(const FpModule& m,
                                       const std::vector<std::uint32_t>& functional) {
  const int d = m.dim();
  const int n = m.group().order();
  FpMatrix constraints(m.p(), n, d);
  for (int g = 0; g < n; ++g) {
    const FpMatrix& a = m.action(g);
    for (int j = 0; j < d; ++j) {
      std::uint64_t acc = 0;
      for (int i = 0; i < d; ++i)
        acc = (acc + static_cast<std::uint64_t>(functional[i]) * a(i, j)) % m.p();
      constraints(g, j) = static_cast<std::uint32_t>(acc);
    }
  }
  return kernel(constraints);
}

HyperplaneSearch weisner_hyperplane_exists(const FpModule& m, std::uint64_t cap) {
  const int d = m.dim();
  if (d == 0) return {true, std::nullopt};  // zero module: dual is cyclic
  const std::uint64_t size = checked_pow(m.p(), d, cap);
  for (std::uint64_t code = 1; code < size; ++code) {
    auto lam = vector_from_code(code, m.p(), d);
    // Normalize: first nonzero coefficient must be 1 (one functional per
    // hyperplane), (p^d - 1)/(p - 1) candidates in lexicographic order.
    std::uint32_t lead = 0;
    for (auto x : lam)
      if (x != 0) {
        lead = x;
        break;
      }
    if (lead != 1) continue;
    if (largest_submodule_in_kernel(m, lam).dim() == 0) return {true, std::move(lam)};
  }
  return {false, std::nullopt};
}

}  // namespace fir
