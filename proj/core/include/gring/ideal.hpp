#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

// Two-sided ideal of a finite ring: a membership bitset plus two small
// element lists — the generators that were asked for, and the additive
// generating set recorded while closing (its size grows with log |R|, so
// products and subset tests never touch the full member set).
class Ideal {
public:
  Ideal() = default;  // invalid until assigned from a builder

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return count_; }
  bool contains(ElemId x) const { return bits_.test(x); }
  bool is_zero() const { return count_ == 1; }
  bool is_whole() const { return count_ == bits_.size(); }
  bool subset_of(const Ideal& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool operator==(const Ideal& other) const { return bits_ == other.bits_; }

  std::span<const ElemId> generators() const { return gens_; }
  std::span<const ElemId> additive_generators() const { return add_gens_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  std::vector<ElemId> members() const;  // ascending ids

private:
  friend struct IdealBuilder;
  RingPtr ring_;
  boost::dynamic_bitset<> bits_;
  std::size_t count_ = 0;
  std::vector<ElemId> gens_;
  std::vector<ElemId> add_gens_;
};

Ideal zero_ideal(const RingPtr& r);
Ideal whole_ideal(const RingPtr& r);

// Additive subgroup generated by gens (no multiplicative closure), with a
// small recorded generating subset. Building block for one-sided module
// spans and annihilator comparisons.
struct AdditiveSpan {
  boost::dynamic_bitset<> members;
  std::vector<ElemId> add_gens;
};
AdditiveSpan additive_span(const RingPtr& r, std::span<const ElemId> gens);

// Least two-sided ideal containing gens. Worklist closure: absorbed elements
// are closed additively coset-by-coset and multiplied by the ring's
// multiplier generators on both sides, which suffices for stability under
// all of R (multiplication is Z-bilinear and every ring element is a
// Z-combination of products of multiplier generators).
Ideal ideal_closure(const RingPtr& r, std::span<const ElemId> gens,
                    const EngineLimits& limits = {});

Ideal principal_ideal(const RingPtr& r, ElemId x,
                      const EngineLimits& limits = {});

// Wraps an already-closed member set, recovering a small additive generating
// set. Verifies closure (additive span and multiplier stability) and throws
// std::invalid_argument when the set is not a two-sided ideal.
Ideal ideal_from_members(const RingPtr& r, const boost::dynamic_bitset<>& members,
                         std::vector<ElemId> gens,
                         const EngineLimits& limits = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b, const EngineLimits& limits = {});
// Exact product IJ: the additive span of pairwise products of the two
// additive generating sets (a two-sided ideal already, no further closure).
Ideal ideal_product(const Ideal& a, const Ideal& b,
                    const EngineLimits& limits = {});
Ideal ideal_power(const Ideal& a, unsigned k, const EngineLimits& limits = {});
Ideal ideal_intersect(const Ideal& a, const Ideal& b,
                      const EngineLimits& limits = {});

// Subset test for products without materializing them: PQ ⊆ I iff every
// pairwise product of additive generators lies in I.
bool ideal_product_subset(const Ideal& p, const Ideal& q, const Ideal& i);

// Least m with P^m ⊆ I, via the descending chain C_m = P^m + I; absent when
// the chain stabilizes above I. nilpotency_index is the I = 0 case.
std::optional<unsigned> ideal_nilpotency_mod(const Ideal& p, const Ideal& i,
                                             const EngineLimits& limits = {});
std::optional<unsigned> ideal_nilpotency_index(const Ideal& i,
                                               const EngineLimits& limits = {});

// One-sided annihilator of the additive span of xs (so xs must additively
// generate the set being annihilated). left: {a : a·x = 0 for all x}.
// The result is always a one-sided ideal; `ideal` is present when the set
// turned out two-sided (e.g. X itself two-sided, or commutative rings).
struct AnnihilatorResult {
  boost::dynamic_bitset<> members;
  bool left = true;
  bool two_sided = false;
  std::optional<Ideal> ideal;
};
AnnihilatorResult annihilator(const RingPtr& r, std::span<const ElemId> xs,
                              bool left, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// Property engine

enum class IdealProperty {
  Prime,
  Semiprime,
  Nilary,
  PNilary,
  RightPrimary,
  LeftPrimary,
  Essential,
};

const char* property_name(IdealProperty p);
std::optional<IdealProperty> property_from_name(std::string_view name);

struct PropertyWitness {
  std::string kind;  // "element" | "element-pair" | "ideal-pair"
  std::vector<ElemId> elements;          // canonical representatives
  std::vector<ElemId> least_generators;  // for ideal pairs
  std::string note;
};

struct PropertyReport {
  IdealProperty property{};
  bool holds = false;
  bool ideal_is_whole = false;
  std::string regime;  // "principal-pair"
  std::uint64_t pairs_checked = 0;
  std::string note;
  std::optional<PropertyWitness> witness;  // present iff !holds
};

// Decides the property over all pairs of distinct principal ideals. In a
// finite ring every ideal is a finite sum of principal ideals and finite
// sums of ideals nilpotent mod I are nilpotent mod I, so the principal-pair
// test decides the all-ideals property; nilary and p-nilary coincide here.
// Witnesses are canonical: element witnesses are lexicographically least;
// ideal-pair witnesses take the least-generator pair, each ideal shown by
// its least idempotent generator when one generates it, else its least
// generator. Throws CapExceeded above limits.property_cap.
PropertyReport check_ideal_property(const Ideal& i, IdealProperty prop,
                                    const EngineLimits& limits = {});

// The distinct principal ideals of r, built once per ring and cached on it.
const std::vector<Ideal>& distinct_principal_ideals(
    const RingPtr& r, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// Radicals

// Pseudo radical: the sum of all ideals nilpotent mod I, computed as
// I + Σ{⟨x⟩ : ⟨x⟩ nilpotent mod I} (any V with V^n ⊆ I is covered by the
// principal ideals of its members).
Ideal pseudo_radical(const RingPtr& r, const Ideal& i,
                     const EngineLimits& limits = {});
// Prime radical of a finite ring = the sum of its nilpotent ideals = √0.
Ideal prime_radical(const RingPtr& r, const EngineLimits& limits = {});
// {x : 1 - rx is a unit for every r}; two-sidedness is verified.
Ideal jacobson_radical(const RingPtr& r, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// Exhaustive oracle

// Every two-sided ideal exactly once, as the join-closure of the distinct
// principal ideals (complete: every ideal is the sum of the principal
// ideals of its members), sorted by (size, members). Guarded by
// limits.oracle_cap and limits.oracle_ideal_guard.
std::vector<Ideal> enumerate_all_ideals(const RingPtr& r,
                                        const EngineLimits& limits = {});

// The property decided by quantifying over all ideal pairs; exists only to
// validate the principal-pair reduction.
bool exhaustive_property_oracle(const Ideal& i, IdealProperty prop,
                                const EngineLimits& limits = {});

}  // namespace gring
