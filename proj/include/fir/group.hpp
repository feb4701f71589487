#pragma once

// Finite groups as validated multiplication tables. Element 0 is always the
// identity; constructors relabel if needed. Groups are immutable after
// construction and safe to share across threads.

#include <string>
#include <vector>

#include "fir/errors.hpp"

namespace fir {

inline constexpr int kDefaultOrderCap = 5000;
/// Full associativity validation is O(n^3); above this it is skipped for
/// tables built by trusted constructors.
inline constexpr int kAssocValidationCap = 256;

class FiniteGroup {
 public:
  /// Validates closure, associativity (for n <= kAssocValidationCap),
  /// identity and inverses, in that order; relabels the identity to 0.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table);

  /// Closure of permutation generators (0-based images). Elements are ordered
  /// by breadth-first discovery, identity first.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                                       int cap = kDefaultOrderCap);

  /// Trusted path for builders: table must already have identity at 0.
  static FiniteGroup from_valid_table(std::vector<int> flat_table, int n);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  int power(int a, long long k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  /// A small generating sequence (greedy, deterministic). Empty for the
  /// trivial group.
  const std::vector<int>& generators() const { return generators_; }

  long long exponent() const;

 private:
  FiniteGroup() = default;
  void finalize();  // inverses, element orders, generators

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<int> generators_;
};

/// Subset of a group's elements, validated to be a subgroup. Members are kept
/// sorted; the parent group must outlive the set.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  SubgroupSet(const FiniteGroup& g, std::vector<int> members);  // validates
  static SubgroupSet trivial(const FiniteGroup& g);
  static SubgroupSet whole(const FiniteGroup& g);
  static SubgroupSet generated_by(const FiniteGroup& g, const std::vector<int>& seeds);

  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int x) const;
  bool contains(const SubgroupSet& other) const;
  const FiniteGroup& parent() const { return *parent_; }

  bool operator==(const SubgroupSet& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  const FiniteGroup* parent_ = nullptr;
  std::vector<int> members_;
};

SubgroupSet center(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const SubgroupSet& s);
SubgroupSet conjugate_subgroup(const FiniteGroup& g, const SubgroupSet& s, int x);
SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& s);

/// Smallest normal subgroup containing `seed`.
SubgroupSet normal_closure(const FiniteGroup& g, int seed);
/// Largest normal subgroup of g contained in s (intersection of conjugates).
SubgroupSet core(const FiniteGroup& g, const SubgroupSet& s);

/// Inclusion-minimal nontrivial normal subgroups, sorted by (order, members).
/// Empty for the trivial group.
std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g);

/// One Sylow p-subgroup, built by normalizer extension.
SubgroupSet sylow(const FiniteGroup& g, int p);
bool is_nilpotent(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const SubgroupSet& s);
bool is_cyclic_group(const SubgroupSet& s);

std::vector<int> prime_divisors(int n);

/// Group homomorphism given by the image of every source element; validated
/// at construction.
class GroupHom {
 public:
  GroupHom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int> images);
  const std::vector<int>& images() const { return images_; }
  SubgroupSet kernel_subgroup() const;
  bool surjective() const;
  const FiniteGroup& source() const { return *src_; }
  const FiniteGroup& target() const { return *dst_; }

 private:
  const FiniteGroup* src_ = nullptr;
  const FiniteGroup* dst_ = nullptr;
  std::vector<int> images_;
};

}  // namespace fir
