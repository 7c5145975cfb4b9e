#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gring/common.hpp"

namespace gring {

// Finite group as an explicit Cayley table. Element ids are 0..order-1 with
struct Subgroup;
struct QuotientGroup;
struct SubgroupAsGroup;

// id 0 the identity; the element order is fixed by the constructor and never
// changes, so ids are stable keys for everything downstream.
class GroupTable {
public:
  static GroupTable cyclic(unsigned n);
  // Dihedral group on n vertices, order 2n (n >= 2).
  static GroupTable dihedral(unsigned n);
  static GroupTable quaternion8();
  // Symmetric group on n letters, n <= 4; permutations in lexicographic
  // one-line order, so id 0 is the identity.
  static GroupTable symmetric(unsigned n);
  static GroupTable product(const GroupTable& a, const GroupTable& b);

  std::size_t order() const { return order_; }
  ElemId identity() const { return 0; }
  ElemId mul(ElemId a, ElemId b) const { return table_[a * order_ + b]; }
  ElemId inv(ElemId a) const { return inv_[a]; }
  ElemId conjugate(ElemId g, ElemId x) const {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  unsigned element_order(ElemId a) const { return elem_order_[a]; }
  const std::string& label(ElemId a) const { return labels_[a]; }
  const std::string& name() const { return name_; }
  // Small generating set (e.g. {r, s} for dihedral); used by closure
  // algorithms that only need to quantify over generators.
  std::span<const ElemId> generators() const { return generators_; }

  bool is_abelian() const;

private:
  GroupTable() = default;
  void finish();  // computes inv_, elem_order_, validates the table

  friend struct QuotientGroup;
  friend struct SubgroupAsGroup;
  friend QuotientGroup quotient_group(const GroupTable&, const Subgroup&);
  friend SubgroupAsGroup subgroup_as_group(const GroupTable&, const Subgroup&);

  std::size_t order_ = 0;
  std::vector<ElemId> table_;
  std::vector<ElemId> inv_;
  std::vector<unsigned> elem_order_;
  std::vector<std::string> labels_;
  std::vector<ElemId> generators_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Subset of a parent group's ids, sorted ascending, closed under the group
// operation. `normal` caches conjugation-invariance in the parent.
struct Subgroup {
  std::vector<ElemId> members;
  bool normal = false;

  std::size_t order() const { return members.size(); }
  bool contains(ElemId g) const;
  bool is_trivial() const { return members.size() == 1; }
};

Subgroup trivial_subgroup();
Subgroup whole_subgroup(const GroupTable& g);
Subgroup cyclic_subgroup(const GroupTable& g, ElemId x);
// Closure of `seed` under multiplication and inverses.
Subgroup generated_subgroup(const GroupTable& g, std::span<const ElemId> seed);
bool is_normal_subgroup(const GroupTable& g, const Subgroup& h);

// All subgroups, enumerated by closing the set of cyclic subgroups under
// pairwise join. Sorted by (order, members) so the listing is deterministic.
std::vector<Subgroup> all_subgroups(const GroupTable& g,
                                    const EngineLimits& limits = {});
std::vector<Subgroup> normal_subgroups(const GroupTable& g,
                                       const EngineLimits& limits = {});

// Least normal subgroup containing `seed`: closes under conjugation,
// multiplication and inverses in one worklist.
Subgroup normal_closure(const GroupTable& g, std::span<const ElemId> seed);

Subgroup center(const GroupTable& g);

struct QuotientGroup {
  GroupTable group;
  // Parent id -> quotient id. The projection is a verified homomorphism with
  // kernel exactly H; quotient ids follow ascending least coset
  // representatives, so labels stay reproducible.
  std::vector<ElemId> projection;
};

QuotientGroup quotient_group(const GroupTable& g, const Subgroup& h);

struct SubgroupAsGroup {
  GroupTable group;
  std::vector<ElemId> to_parent;  // subgroup id -> parent id (ascending)
};

// Reindexes a subgroup as a standalone GroupTable (the identity keeps id 0
// because member lists are sorted and the parent identity is 0).
SubgroupAsGroup subgroup_as_group(const GroupTable& g, const Subgroup& h);

struct GroupInfo {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<unsigned> element_orders;       // indexed by element id
  std::vector<ElemId> center_members;
  std::vector<std::size_t> normal_subgroup_orders;  // sorted, with multiplicity
};

GroupInfo group_info(const GroupTable& g, const EngineLimits& limits = {});

enum class GroupPredicate {
  PGroup,        // every element order is a power of p
  Dedekind,      // every subgroup is normal
  Prime,         // nu(G) = {1}: no nontrivial finite normal subgroup
  LocallyNormal, // every finite subset lies in a finite normal subgroup
};

struct PredicateResult {
  bool value = false;
  // For PGroup: the witnessing prime, when value is true and order > 1.
  std::optional<unsigned> prime;
  // On failure: an element or subgroup exhibiting it (e.g. a non-normal
  // subgroup for Dedekind, a nontrivial normal subgroup for Prime).
  std::optional<ElemId> witness_element;
  std::optional<Subgroup> witness_subgroup;
};

// For PGroup, `p` may pin the prime to test; when absent the unique
// candidate dividing the group order is used.
PredicateResult group_predicate(const GroupTable& g, GroupPredicate pred,
                                std::optional<unsigned> p = std::nullopt,
                                const EngineLimits& limits = {});

struct NuSigma {
  // Orders of finite normal subgroups (deduplicated, sorted): nu(G).
  std::vector<std::size_t> nu;
  // sigma(G): the subgroup generated by all finite normal subgroups; for a
  // finite group this is G itself.
  Subgroup sigma;
};

NuSigma nu_sigma(const GroupTable& g, const EngineLimits& limits = {});

}  // namespace gring
