#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gring/common.hpp"
#include "gring/group.hpp"

namespace gring {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct PrincipalCache;

struct ZmodProv {
  std::uint64_t modulus;
};
struct ProductProv {
  RingPtr left;
  RingPtr right;
};
struct GroupRingProv {
  RingPtr coeff;
  GroupPtr group;
  // pow[i] = |coeff|^(|G|-1-i): the coefficient at group position i is the
  // i-th big-endian digit, so ids sort lexicographically by coefficient
  // vector.
  std::vector<std::uint64_t> pow;
};
struct QuotientProv {
  RingPtr parent;
  std::vector<ElemId> reps;     // quotient id -> least parent representative
  std::vector<ElemId> to_rep;   // parent id -> quotient id
  std::vector<ElemId> modulus_gens;
  std::size_t modulus_size = 0;
};
struct RawProv {
  std::string name;
};

using Provenance =
    std::variant<ZmodProv, ProductProv, GroupRingProv, QuotientProv, RawProv>;

// Finite unital ring on dense ids 0..size-1 with id 0 the zero element.
// Rings at or below the table cap carry full operation tables; larger ones
// compute operations on demand from provenance, with a bounded concurrent
// memo for products.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
  ~FiniteRing();
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const { return size_; }
  ElemId zero() const { return 0; }
  ElemId one() const { return one_; }
  ElemId add(ElemId a, ElemId b) const {
    return tabled_ ? add_[std::size_t{a} * size_ + b] : add_impl(a, b);
  }
  ElemId mul(ElemId a, ElemId b) const {
    return tabled_ ? mul_[std::size_t{a} * size_ + b] : mul_memo(a, b);
  }
  ElemId neg(ElemId a) const { return tabled_ ? neg_[a] : neg_impl(a); }
  ElemId sub(ElemId a, ElemId b) const { return add(a, neg(b)); }
  ElemId int_mul(std::uint64_t k, ElemId a) const;  // k-fold sum of a
  ElemId pow(ElemId a, unsigned k) const;           // k >= 1

  std::uint64_t characteristic() const { return characteristic_; }
  bool tabled() const { return tabled_; }
  const Provenance& provenance() const { return prov_; }
  std::string provenance_string() const { return name_; }
  std::string label(ElemId a) const;

  // Z-linear spanning set of the additive group; small (grows with log size,
  // not size).
  std::span<const ElemId> additive_generators() const { return add_gens_; }
  // Multiplicative closure reduction set: every element is a Z-combination
  // of products of these, so an additively closed set stable under
  // multiplication by them (both sides) is stable under all of R.
  std::span<const ElemId> multiplier_generators() const { return mult_gens_; }

  bool commutative() const { return commutative_; }
  bool is_unit(ElemId a) const;  // two-sided inverse exists
  std::optional<unsigned> nilpotency_index(ElemId a) const;

  // Per-ring memo of principal ideals; owned here so every consumer of the
  // same ring shares it. Defined in ideal.cpp.
  PrincipalCache& principal_cache() const;

private:
  FiniteRing() = default;
  friend RingPtr finish_ring(std::unique_ptr<FiniteRing> r,
                             const EngineLimits& limits);
  friend RingPtr make_ring_from_tables(std::string name,
                                       std::vector<ElemId> add,
                                       std::vector<ElemId> mul, ElemId one,
                                       const EngineLimits& limits);
  friend RingPtr make_zmod(std::uint64_t n, const EngineLimits& limits);
  friend RingPtr make_product_ring(RingPtr a, RingPtr b,
                                   const EngineLimits& limits);
  friend RingPtr make_group_ring(RingPtr coeff, GroupPtr group,
                                 const EngineLimits& limits);
  friend RingPtr make_quotient_ring(RingPtr parent,
                                    const std::vector<ElemId>& members,
                                    std::vector<ElemId> gens,
                                    const EngineLimits& limits);

  ElemId add_impl(ElemId, ElemId) const;
  ElemId mul_impl(ElemId, ElemId) const;
  ElemId neg_impl(ElemId) const;
  ElemId mul_memo(ElemId, ElemId) const;

  std::size_t size_ = 0;
  ElemId one_ = 0;
  bool tabled_ = false;
  bool commutative_ = false;
  std::uint64_t characteristic_ = 0;
  Provenance prov_ = RawProv{};
  std::string name_;
  std::vector<ElemId> add_, mul_, neg_;
  std::vector<ElemId> add_gens_, mult_gens_;

  struct MemoShard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, ElemId> map;
  };
  static constexpr unsigned kMemoShards = 8;
  mutable std::array<MemoShard, kMemoShards> memo_;
  mutable std::atomic<std::size_t> memo_entries_{0};

  mutable std::once_flag pcache_once_;
  mutable std::unique_ptr<PrincipalCache> pcache_;
};

RingPtr make_zmod(std::uint64_t n, const EngineLimits& limits = {});
RingPtr make_product_ring(RingPtr a, RingPtr b, const EngineLimits& limits = {});
RingPtr make_group_ring(RingPtr coeff, GroupPtr group,
                        const EngineLimits& limits = {});
// Quotient by a two-sided ideal given as its sorted member list. Coset
// representatives are the least parent ids, scanned in order, so the
// quotient's element order is deterministic.
RingPtr make_quotient_ring(RingPtr parent, const std::vector<ElemId>& members,
                           std::vector<ElemId> gens,
                           const EngineLimits& limits = {});
// Raw Cayley-table construction, mostly for tests and corrupted-table
// negative cases. Throws only on structural nonsense (sizes); axiom
// violations are left to validate_ring_axioms.
RingPtr make_ring_from_tables(std::string name, std::vector<ElemId> add,
                              std::vector<ElemId> mul, ElemId one,
                              const EngineLimits& limits = {});

// Coefficient-vector view of a group ring.
struct GroupRingContext {
  RingPtr ring;
  RingPtr coeff;
  GroupPtr group;

  ElemId encode(std::span<const ElemId> coeffs) const;
  void decode(ElemId x, std::span<ElemId> out) const;
  ElemId coeff_of(ElemId x, ElemId g) const;
  ElemId basis_elem(ElemId a, ElemId g) const;  // the element a·g
  ElemId group_elem(ElemId g) const { return basis_elem(coeff->one(), g); }
  ElemId scalar(ElemId a) const { return basis_elem(a, group->identity()); }
};

std::optional<GroupRingContext> group_ring_context(const RingPtr& r);

struct ValidationReport {
  bool pass = true;
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t checked = 0;
  std::string failure;  // law + triple, when pass is false
};

// Ring-axiom oracle: checks associativity of both operations, commutativity
// of +, distributivity, identity and inverse laws. All triples when
// size <= limits.axiom_exhaustive_cap, else limits.axiom_sample_count seeded
// random triples.
ValidationReport validate_ring_axioms(const FiniteRing& r,
                                      const EngineLimits& limits = {});

}  // namespace gring
