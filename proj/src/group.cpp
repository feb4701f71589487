#include "fir/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fir {

int FiniteGroup::power(int a, long long k) const {
  const long long ord = element_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  int acc = 0;
  for (long long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(element_order_[a]));
  return e;
}

void FiniteGroup::finalize() {
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) fail(Err::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  element_order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
  }
  // Greedy generating sequence: adjoin the smallest element outside the
  // subgroup generated so far.
  generators_.clear();
  std::vector<char> in(n_, 0);
  in[0] = 1;
  int reached = 1;
  while (reached < n_) {
    int next = -1;
    for (int a = 0; a < n_; ++a)
      if (!in[a]) {
        next = a;
        break;
      }
    generators_.push_back(next);
    // closure of current set with `next`
    std::vector<int> frontier{next};
    in[next] = 1;
    ++reached;
    std::vector<int> current;
    for (int a = 0; a < n_; ++a)
      if (in[a]) current.push_back(a);
    while (!frontier.empty()) {
      std::vector<int> fresh;
      for (int f : frontier)
        for (std::size_t i = 0; i < current.size(); ++i) {
          const int c = current[i];
          for (int prod : {mul(f, c), mul(c, f)}) {
            if (!in[prod]) {
              in[prod] = 1;
              ++reached;
              fresh.push_back(prod);
              current.push_back(prod);
            }
          }
        }
      frontier = std::move(fresh);
    }
  }
}

FiniteGroup FiniteGroup::from_valid_table(std::vector<int> flat_table, int n) {
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat_table);
  if (g.table_.size() != static_cast<std::size_t>(n) * n)
    fail(Err::Internal, "trusted table has wrong size");
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Err::NoIdentity, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(Err::NotClosed, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        fail(Err::NotClosed, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") = " + std::to_string(table[a][b]) + " out of range");
  }
  if (n <= kAssocValidationCap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            fail(Err::NotAssociative, "triple (" + std::to_string(a) + "," + std::to_string(b) +
                                          "," + std::to_string(c) + ")");
  }
  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (table[a][b] != b || table[b][a] != b) {
        ok = false;
        break;
      }
    if (ok) {
      e = a;
      break;
    }
  }
  if (e < 0) fail(Err::NoIdentity, "no two-sided identity");
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        has = true;
        break;
      }
    if (!has) fail(Err::NoInverse, "element " + std::to_string(a));
  }
  // Relabel so the identity is 0.
  std::vector<int> relabel(n);
  for (int a = 0; a < n; ++a) relabel[a] = a;
  if (e != 0) std::swap(relabel[0], relabel[e]);  // relabel[old] = new, involution
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(relabel[a]) * n + relabel[b]] = relabel[table[a][b]];
  return from_valid_table(std::move(flat), n);
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];  // (a*b)(i) = a(b(i))
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens, int cap) {
  std::size_t degree = 1;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<std::vector<int>> norm_gens;
  for (const auto& g : gens) {
    std::vector<int> perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(degree, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || g[i] >= static_cast<int>(degree) || seen[g[i]])
        fail(Err::InvalidAction, "generator is not a permutation");
      seen[g[i]] = 1;
      perm[i] = g[i];
    }
    norm_gens.push_back(std::move(perm));
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : norm_gens) {
      auto prod = compose(elements[head], g);
      if (index.emplace(prod, static_cast<int>(elements.size())).second) {
        elements.push_back(prod);
        if (static_cast<int>(elements.size()) > cap)
          fail(Err::OrderCapExceeded, "permutation closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(elements[a], elements[b]));
  return from_valid_table(std::move(flat), n);
}

SubgroupSet::SubgroupSet(const FiniteGroup& g, std::vector<int> members)
    : parent_(&g), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != 0) fail(Err::NotASubgroup, "missing identity");
  std::vector<char> mask(g.order(), 0);
  for (int a : members_) {
    if (a < 0 || a >= g.order()) fail(Err::NotASubgroup, "member out of range");
    mask[a] = 1;
  }
  for (int a : members_)
    for (int b : members_)
      if (!mask[g.mul(a, b)])
        fail(Err::NotASubgroup,
             "not closed: " + std::to_string(a) + " * " + std::to_string(b));
  if (g.order() % members_.size() != 0)
    fail(Err::NotASubgroup, "order does not divide group order");  // unreachable for real subgroups
}

SubgroupSet SubgroupSet::trivial(const FiniteGroup& g) { return SubgroupSet(g, {0}); }

SubgroupSet SubgroupSet::whole(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupSet(g, std::move(all));
}

SubgroupSet SubgroupSet::generated_by(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> current{0};
  std::vector<int> frontier;
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      current.push_back(s);
      frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<int> fresh;
    for (int f : frontier)
      for (std::size_t i = 0; i < current.size(); ++i) {
        const int c = current[i];
        for (int prod : {g.mul(f, c), g.mul(c, f)}) {
          if (!in[prod]) {
            in[prod] = 1;
            current.push_back(prod);
            fresh.push_back(prod);
          }
        }
      }
    frontier = std::move(fresh);
  }
  std::sort(current.begin(), current.end());
  return SubgroupSet(g, std::move(current));
}

bool SubgroupSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SubgroupSet::contains(const SubgroupSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

SubgroupSet center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return SubgroupSet(g, std::move(z));
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& s) {
  // Conjugation by each generator permutes a closed subset that it maps into
  // itself, so generator checks decide normality under the whole group.
  for (int x : g.generators())
    for (int m : s.members())
      if (!s.contains(g.conj(x, m))) return false;
  return true;
}

SubgroupSet conjugate_subgroup(const FiniteGroup& g, const SubgroupSet& s, int x) {
  std::vector<int> m;
  m.reserve(s.members().size());
  for (int a : s.members()) m.push_back(g.conj(x, a));
  return SubgroupSet(g, std::move(m));
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  if (&a.parent() != &b.parent()) fail(Err::Internal, "intersect across different groups");
  std::vector<int> m;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(m));
  return SubgroupSet(a.parent(), std::move(m));
}

SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& s) {
  std::vector<int> m;
  for (int x = 0; x < g.order(); ++x) {
    bool norm = true;
    for (int a : s.members())
      if (!s.contains(g.conj(x, a))) {
        norm = false;
        break;
      }
    if (norm) m.push_back(x);
  }
  return SubgroupSet(g, std::move(m));
}

SubgroupSet normal_closure(const FiniteGroup& g, int seed) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> current{0};
  std::vector<int> frontier;
  auto add = [&](int x, std::vector<int>& fresh) {
    if (!in[x]) {
      in[x] = 1;
      current.push_back(x);
      fresh.push_back(x);
    }
  };
  {
    std::vector<int> fresh;
    add(seed, fresh);
    frontier = std::move(fresh);
  }
  while (!frontier.empty()) {
    std::vector<int> fresh;
    for (int f : frontier) {
      for (int x : g.generators()) add(g.conj(x, f), fresh);  // generator conjugates suffice
      for (std::size_t i = 0; i < current.size(); ++i) {
        add(g.mul(f, current[i]), fresh);
        add(g.mul(current[i], f), fresh);
      }
    }
    frontier = std::move(fresh);
  }
  std::sort(current.begin(), current.end());
  return SubgroupSet(g, std::move(current));
}

SubgroupSet core(const FiniteGroup& g, const SubgroupSet& s) {
  SubgroupSet acc = s;
  for (int x = 0; x < g.order() && acc.order() > 1; ++x)
    acc = intersect(acc, conjugate_subgroup(g, s, x));
  return acc;
}

std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> closures;
  for (int a = 1; a < g.order(); ++a) closures.insert(normal_closure(g, a).members());
  std::vector<std::vector<int>> candidates(closures.begin(), closures.end());
  std::vector<SubgroupSet> minimal;
  for (const auto& n : candidates) {
    bool is_min = true;
    for (const auto& m : candidates) {
      if (m.size() >= n.size() || m == n) continue;
      if (std::includes(n.begin(), n.end(), m.begin(), m.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.emplace_back(g, n);
  }
  std::sort(minimal.begin(), minimal.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return minimal;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

namespace {

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

SubgroupSet sylow(const FiniteGroup& g, int p) {
  if (g.order() % p != 0)
    fail(Err::PrimeDoesNotDivideOrder, std::to_string(p) + " does not divide " + std::to_string(g.order()));
  int p_part = 1, n = g.order();
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  // Seed: a p-element of maximal p-power order (smallest index among those).
  int seed = 0, best = 1;
  for (int a = 0; a < g.order(); ++a) {
    const int o = g.element_order(a);
    if (is_p_power(o, p) && o > best) {
      best = o;
      seed = a;
    }
  }
  SubgroupSet part = SubgroupSet::generated_by(g, {seed});
  while (part.order() < p_part) {
    SubgroupSet norm = normalizer(g, part);
    int adjoin = -1;
    for (int y : norm.members())
      if (!part.contains(y) && is_p_power(g.element_order(y), p)) {
        adjoin = y;
        break;
      }
    if (adjoin < 0) fail(Err::Internal, "sylow extension stalled");
    std::vector<int> seeds = part.members();
    seeds.push_back(adjoin);
    part = SubgroupSet::generated_by(g, seeds);
    if (!is_p_power(part.order(), p)) fail(Err::Internal, "sylow extension left p-group range");
  }
  return part;
}

bool is_nilpotent(const FiniteGroup& g) {
  SubgroupSet gamma = SubgroupSet::whole(g);
  while (true) {
    std::vector<int> comms;
    for (int a : gamma.members())
      for (int x = 0; x < g.order(); ++x) comms.push_back(g.commutator(a, x));
    SubgroupSet next = SubgroupSet::generated_by(g, comms);
    if (next.order() == 1) return true;
    if (next.order() == gamma.order()) return false;  // series stabilized above {e}
    gamma = next;
  }
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const SubgroupSet& s) {
  const FiniteGroup& g = s.parent();
  for (int a : s.members())
    for (int b : s.members())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic_group(const SubgroupSet& s) {
  const FiniteGroup& g = s.parent();
  for (int a : s.members())
    if (g.element_order(a) == s.order()) return true;
  return false;
}

GroupHom::GroupHom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int> images)
    : src_(&src), dst_(&dst), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src.order())
    fail(Err::DimensionMismatch, "image list has wrong length");
  for (int x : images_)
    if (x < 0 || x >= dst.order()) fail(Err::InvalidAction, "image out of range");
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (images_[src.mul(a, b)] != dst.mul(images_[a], images_[b]))
        fail(Err::InvalidAction, "not a homomorphism at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
}

SubgroupSet GroupHom::kernel_subgroup() const {
  std::vector<int> k;
  for (int a = 0; a < src_->order(); ++a)
    if (images_[a] == 0) k.push_back(a);
  return SubgroupSet(*src_, std::move(k));
}

bool GroupHom::surjective() const {
  std::vector<char> hit(dst_->order(), 0);
  int count = 0;
  for (int x : images_)
    if (!hit[x]) {
      hit[x] = 1;
      ++count;
    }
  return count == dst_->order();
}

}  // namespace fir
