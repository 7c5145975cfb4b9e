#include "gring/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "principal_cache.hpp"

namespace gring {
namespace {

using Blocks = std::vector<boost::dynamic_bitset<>::block_type>;

Blocks to_blocks(const boost::dynamic_bitset<>& bs) {
  Blocks out;
  out.reserve(bs.num_blocks());
  boost::to_block_range(bs, std::back_inserter(out));
  return out;
}

// Additive-span accumulator. The span is always a subgroup: absorbing y
// walks the cosets M, M+y, M+2y, ... until k·y falls back into M, so each
// successful absorb multiplies the span size by at least 2 and the recorded
// generating set stays logarithmic in |R|.
struct SpanState {
  const FiniteRing& ring;
  boost::dynamic_bitset<> bits;
  std::vector<ElemId> list;      // members, insertion order
  std::vector<ElemId> absorbed;  // additive generating set

  explicit SpanState(const FiniteRing& r) : ring(r), bits(r.size()) {
    bits.set(0);
    list.push_back(0);
  }

  SpanState(const FiniteRing& r, const Ideal& seed) : ring(r), bits(seed.bits()) {
    list = seed.members();
    absorbed.assign(seed.additive_generators().begin(),
                    seed.additive_generators().end());
  }

  bool absorb(ElemId y) {
    if (bits.test(y)) return false;
    absorbed.push_back(y);
    const std::size_t base = list.size();
    ElemId t = y;
    while (!bits.test(t)) {
      for (std::size_t i = 0; i < base; ++i) {
        const ElemId u = ring.add(list[i], t);
        bits.set(u);
        list.push_back(u);
      }
      t = ring.add(t, y);
    }
    return true;
  }
};

}  // namespace

struct IdealBuilder {
  static Ideal make(RingPtr r, boost::dynamic_bitset<> bits,
                    std::vector<ElemId> gens, std::vector<ElemId> add_gens) {
    Ideal out;
    out.ring_ = std::move(r);
    out.count_ = bits.count();
    out.bits_ = std::move(bits);
    out.gens_ = std::move(gens);
    out.add_gens_ = std::move(add_gens);
    return out;
  }
};

AdditiveSpan additive_span(const RingPtr& r, std::span<const ElemId> gens) {
  SpanState s(*r);
  for (const ElemId g : gens) s.absorb(g);
  return AdditiveSpan{std::move(s.bits), std::move(s.absorbed)};
}

std::vector<ElemId> Ideal::members() const {
  std::vector<ElemId> out;
  out.reserve(count_);
  for (auto pos = bits_.find_first(); pos != boost::dynamic_bitset<>::npos;
       pos = bits_.find_next(pos)) {
    out.push_back(static_cast<ElemId>(pos));
  }
  return out;
}

Ideal zero_ideal(const RingPtr& r) {
  boost::dynamic_bitset<> bits(r->size());
  bits.set(0);
  return IdealBuilder::make(r, std::move(bits), {0}, {});
}

Ideal whole_ideal(const RingPtr& r) {
  boost::dynamic_bitset<> bits(r->size());
  bits.set();
  return IdealBuilder::make(r, std::move(bits), {r->one()}, {r->one()});
}

namespace {

void check_enum_cap(const RingPtr& r, const EngineLimits& limits) {
  if (r->size() > limits.ideal_enum_cap) {
    throw CapExceeded("ideal enumeration", r->size(), limits.ideal_enum_cap);
  }
}

}  // namespace

Ideal ideal_closure(const RingPtr& r, std::span<const ElemId> gens,
                    const EngineLimits& limits) {
  check_enum_cap(r, limits);
  SpanState s(*r);
  std::vector<ElemId> work(gens.begin(), gens.end());
  const auto mults = r->multiplier_generators();
  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    const ElemId y = work[idx];
    if (!s.absorb(y)) continue;
    limits.poll();
    if (s.list.size() == r->size()) break;  // already the whole ring
    for (const ElemId m : mults) {
      work.push_back(r->mul(m, y));
      work.push_back(r->mul(y, m));
    }
  }
  return IdealBuilder::make(r, std::move(s.bits),
                            {gens.begin(), gens.end()}, std::move(s.absorbed));
}

Ideal principal_ideal(const RingPtr& r, ElemId x, const EngineLimits& limits) {
  {
    PrincipalCache& pc = r->principal_cache();
    std::lock_guard lock(pc.mutex);
    if (pc.built) return pc.ideals[pc.index_of[x]];
  }
  const ElemId gens[1] = {x};
  return ideal_closure(r, gens, limits);
}

Ideal ideal_from_members(const RingPtr& r, const boost::dynamic_bitset<>& members,
                         std::vector<ElemId> gens, const EngineLimits& limits) {
  check_enum_cap(r, limits);
  if (members.size() != r->size() || !members.test(0)) {
    throw std::invalid_argument("member set is not a two-sided ideal");
  }
  SpanState s(*r);
  for (auto pos = members.find_first(); pos != boost::dynamic_bitset<>::npos;
       pos = members.find_next(pos)) {
    s.absorb(static_cast<ElemId>(pos));
    limits.poll();
  }
  // Generators spanned strictly more than the given set, or stepping outside
  // under a multiplier: either way not an ideal.
  if (s.bits != members) {
    throw std::invalid_argument("member set is not a two-sided ideal");
  }
  for (const ElemId g : s.absorbed) {
    for (const ElemId m : r->multiplier_generators()) {
      if (!members.test(r->mul(m, g)) || !members.test(r->mul(g, m))) {
        throw std::invalid_argument("member set is not a two-sided ideal");
      }
    }
  }
  if (gens.empty()) gens = s.absorbed;
  return IdealBuilder::make(r, members, std::move(gens), std::move(s.absorbed));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b, const EngineLimits& limits) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal sum across rings");
  limits.poll();
  SpanState s(*a.ring(), a);
  for (const ElemId g : b.additive_generators()) s.absorb(g);
  std::vector<ElemId> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealBuilder::make(a.ring(), std::move(s.bits), std::move(gens),
                            std::move(s.absorbed));
}

Ideal ideal_product(const Ideal& a, const Ideal& b, const EngineLimits& limits) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument("ideal product across rings");
  }
  limits.poll();
  const RingPtr& r = a.ring();
  SpanState s(*r);
  for (const ElemId x : a.additive_generators()) {
    for (const ElemId y : b.additive_generators()) {
      s.absorb(r->mul(x, y));
    }
  }
  auto gens = s.absorbed;
  return IdealBuilder::make(r, std::move(s.bits), std::move(gens),
                            std::move(s.absorbed));
}

Ideal ideal_power(const Ideal& a, unsigned k, const EngineLimits& limits) {
  if (k == 0) throw std::invalid_argument("ideal power needs k >= 1");
  Ideal out = a;
  for (unsigned i = 1; i < k; ++i) out = ideal_product(out, a, limits);
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const EngineLimits& limits) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument("ideal intersection across rings");
  }
  return ideal_from_members(a.ring(), a.bits() & b.bits(), {}, limits);
}

bool ideal_product_subset(const Ideal& p, const Ideal& q, const Ideal& i) {
  const RingPtr& r = p.ring();
  for (const ElemId x : p.additive_generators()) {
    for (const ElemId y : q.additive_generators()) {
      if (!i.contains(r->mul(x, y))) return false;
    }
  }
  return true;
}

std::optional<unsigned> ideal_nilpotency_mod(const Ideal& p, const Ideal& i,
                                             const EngineLimits& limits) {
  // Descending chain C_m = P^m + I; C_{m+1} = C_m * P + I. Sizes divide, so
  // the chain stabilizes within log2 |R| steps.
  Ideal c = ideal_sum(p, i, limits);
  for (unsigned m = 1;; ++m) {
    if (c.bits() == i.bits()) return m;
    Ideal next = ideal_sum(ideal_product(c, p, limits), i, limits);
    if (next == c) return std::nullopt;
    c = std::move(next);
    limits.poll();
  }
}

std::optional<unsigned> ideal_nilpotency_index(const Ideal& i,
                                               const EngineLimits& limits) {
  return ideal_nilpotency_mod(i, zero_ideal(i.ring()), limits);
}

AnnihilatorResult annihilator(const RingPtr& r, std::span<const ElemId> xs,
                              bool left, const EngineLimits& limits) {
  const std::size_t n = r->size();
  AnnihilatorResult out;
  out.left = left;
  out.members.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    if ((a & 0xff) == 0) limits.poll();
    bool kills = true;
    for (const ElemId x : xs) {
      const ElemId prod = left ? r->mul(static_cast<ElemId>(a), x)
                               : r->mul(x, static_cast<ElemId>(a));
      if (prod != 0) {
        kills = false;
        break;
      }
    }
    if (kills) out.members.set(a);
  }
  // One-sidedness on the annihilating side is automatic; probe the other
  // side on an additive generating set of the result.
  SpanState s(*r);
  for (auto pos = out.members.find_first(); pos != boost::dynamic_bitset<>::npos;
       pos = out.members.find_next(pos)) {
    s.absorb(static_cast<ElemId>(pos));
  }
  out.two_sided = true;
  for (const ElemId g : s.absorbed) {
    for (const ElemId m : r->multiplier_generators()) {
      const ElemId moved = left ? r->mul(g, m) : r->mul(m, g);
      if (!out.members.test(moved)) {
        out.two_sided = false;
        break;
      }
    }
    if (!out.two_sided) break;
  }
  if (out.two_sided) out.ideal = ideal_from_members(r, out.members, {}, limits);
  return out;
}

// ---------------------------------------------------------------------------
// Principal-ideal cache

PrincipalCache& FiniteRing::principal_cache() const {
  std::call_once(pcache_once_,
                 [this] { pcache_ = std::make_unique<PrincipalCache>(); });
  return *pcache_;
}

const PrincipalCache& built_principal_cache(const RingPtr& r,
                                            const EngineLimits& limits) {
  PrincipalCache& pc = r->principal_cache();
  std::lock_guard lock(pc.mutex);
  if (pc.built) return pc;
  if (r->size() > limits.property_cap) {
    throw CapExceeded("principal ideal table", r->size(), limits.property_cap);
  }
  const std::size_t n = r->size();
  pc.index_of.assign(n, 0);
  std::map<Blocks, std::uint32_t> seen;
  for (std::size_t x = 0; x < n; ++x) {
    const ElemId gens[1] = {static_cast<ElemId>(x)};
    Ideal p = ideal_closure(r, gens, limits);
    auto [it, fresh] =
        seen.emplace(to_blocks(p.bits()), static_cast<std::uint32_t>(pc.ideals.size()));
    if (fresh) {
      pc.ideals.push_back(std::move(p));
      pc.least_gen.push_back(static_cast<ElemId>(x));
    }
    pc.index_of[x] = it->second;
    limits.poll();
  }
  // Representative: least idempotent generator when one generates the ideal
  // (so complementary-idempotent witnesses print as such), else least
  // generator. Ideals are discovered in ascending generator order, hence
  // least_gen is strictly increasing with the index.
  pc.canon_rep = pc.least_gen;
  std::vector<bool> have_idem(pc.ideals.size(), false);
  for (std::size_t x = 0; x < n; ++x) {
    const auto idx = pc.index_of[x];
    if (have_idem[idx]) continue;
    const auto e = static_cast<ElemId>(x);
    if (r->mul(e, e) == e) {
      pc.canon_rep[idx] = e;
      have_idem[idx] = true;
    }
  }
  pc.built = true;
  return pc;
}

const std::vector<Ideal>& distinct_principal_ideals(const RingPtr& r,
                                                    const EngineLimits& limits) {
  return built_principal_cache(r, limits).ideals;
}

// ---------------------------------------------------------------------------
// Property engine

const char* property_name(IdealProperty p) {
  switch (p) {
    case IdealProperty::Prime: return "prime";
    case IdealProperty::Semiprime: return "semiprime";
    case IdealProperty::Nilary: return "nilary";
    case IdealProperty::PNilary: return "p-nilary";
    case IdealProperty::RightPrimary: return "right-primary";
    case IdealProperty::LeftPrimary: return "left-primary";
    case IdealProperty::Essential: return "essential";
  }
  return "?";
}

std::optional<IdealProperty> property_from_name(std::string_view name) {
  for (IdealProperty p :
       {IdealProperty::Prime, IdealProperty::Semiprime, IdealProperty::Nilary,
        IdealProperty::PNilary, IdealProperty::RightPrimary,
        IdealProperty::LeftPrimary, IdealProperty::Essential}) {
    if (name == property_name(p)) return p;
  }
  return std::nullopt;
}

namespace {

constexpr const char* kCoincidenceNote =
    "nilary and p-nilary coincide on finite rings: a finite sum of ideals "
    "nilpotent mod I is nilpotent mod I, so a violating pair of ideals "
    "yields a violating pair of principal ideals";

PropertyWitness ideal_pair_witness(const PrincipalCache& pc, std::size_t i,
                                   std::size_t j, std::string note) {
  PropertyWitness w;
  w.kind = "ideal-pair";
  w.elements = {pc.canon_rep[i], pc.canon_rep[j]};
  w.least_generators = {pc.least_gen[i], pc.least_gen[j]};
  w.note = std::move(note);
  return w;
}

}  // namespace

PropertyReport check_ideal_property(const Ideal& ideal, IdealProperty prop,
                                    const EngineLimits& limits) {
  const RingPtr& r = ideal.ring();
  if (r->size() > limits.property_cap) {
    throw CapExceeded("property engine", r->size(), limits.property_cap);
  }
  const PrincipalCache& pc = built_principal_cache(r, limits);
  const std::size_t k = pc.ideals.size();

  PropertyReport rep;
  rep.property = prop;
  rep.regime = "principal-pair";
  rep.ideal_is_whole = ideal.is_whole();
  rep.holds = true;

  std::vector<char> in_i(k), nilp(k);
  for (std::size_t i = 0; i < k; ++i) {
    in_i[i] = pc.ideals[i].subset_of(ideal);
  }
  const bool needs_nilp =
      prop == IdealProperty::Nilary || prop == IdealProperty::PNilary ||
      prop == IdealProperty::RightPrimary || prop == IdealProperty::LeftPrimary;
  if (needs_nilp) {
    for (std::size_t i = 0; i < k; ++i) {
      nilp[i] = ideal_nilpotency_mod(pc.ideals[i], ideal, limits).has_value();
    }
  }

  if (prop == IdealProperty::Essential) {
    // I is essential iff it meets every nonzero principal ideal nontrivially
    // (any nonzero ideal contains a nonzero principal one).
    std::vector<char> misses(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      ++rep.pairs_checked;
      if (pc.ideals[i].is_zero()) continue;
      misses[i] = (pc.ideals[i].bits() & ideal.bits()).count() <= 1;
      if (misses[i]) rep.holds = false;
    }
    if (!rep.holds) {
      for (std::size_t x = 1; x < r->size(); ++x) {
        if (misses[pc.index_of[x]]) {
          rep.witness = PropertyWitness{
              .kind = "element",
              .elements = {static_cast<ElemId>(x)},
              .least_generators = {},
              .note = "nonzero element whose principal ideal meets I only at 0"};
          break;
        }
      }
    }
    return rep;
  }

  if (prop == IdealProperty::Semiprime) {
    std::vector<char> bad(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      ++rep.pairs_checked;
      bad[i] = !in_i[i] && ideal_product_subset(pc.ideals[i], pc.ideals[i], ideal);
      if (bad[i]) rep.holds = false;
    }
    if (!rep.holds) {
      for (std::size_t x = 0; x < r->size(); ++x) {
        if (!ideal.contains(static_cast<ElemId>(x)) && bad[pc.index_of[x]]) {
          rep.witness = PropertyWitness{
              .kind = "element",
              .elements = {static_cast<ElemId>(x)},
              .least_generators = {},
              .note = "x*R*x lies in I while x does not"};
          break;
        }
      }
    }
    return rep;
  }

  // The remaining properties need the full pair matrix.
  std::vector<boost::dynamic_bitset<>> prod_in(k, boost::dynamic_bitset<>(k));
  for (std::size_t i = 0; i < k; ++i) {
    limits.poll();
    for (std::size_t j = 0; j < k; ++j) {
      ++rep.pairs_checked;
      if (ideal_product_subset(pc.ideals[i], pc.ideals[j], ideal)) {
        prod_in[i].set(j);
      }
    }
  }

  auto fails = [&](std::size_t i, std::size_t j) -> bool {
    if (!prod_in[i].test(j)) return false;
    switch (prop) {
      case IdealProperty::Prime: return !in_i[i] && !in_i[j];
      case IdealProperty::Nilary:
      case IdealProperty::PNilary: return !nilp[i] && !nilp[j];
      case IdealProperty::RightPrimary: return !in_i[i] && !nilp[j];
      case IdealProperty::LeftPrimary: return !in_i[j] && !nilp[i];
      default: return false;
    }
  };

  bool any_fail = false;
  for (std::size_t i = 0; i < k && !any_fail; ++i) {
    for (std::size_t j = 0; j < k && !any_fail; ++j) {
      any_fail = fails(i, j);
    }
  }
  rep.holds = !any_fail;
  if (prop == IdealProperty::Nilary || prop == IdealProperty::PNilary) {
    rep.note = kCoincidenceNote;
  }
  if (rep.holds) return rep;

  if (prop == IdealProperty::Prime) {
    // Lexicographically least element pair (a, b) with aRb inside I and
    // a, b outside.
    for (std::size_t a = 0; a < r->size() && !rep.witness; ++a) {
      if (ideal.contains(static_cast<ElemId>(a))) continue;
      const auto ia = pc.index_of[a];
      if (prod_in[ia].none()) continue;
      for (std::size_t b = 0; b < r->size(); ++b) {
        if (ideal.contains(static_cast<ElemId>(b))) continue;
        if (prod_in[ia].test(pc.index_of[b])) {
          rep.witness = PropertyWitness{
              .kind = "element-pair",
              .elements = {static_cast<ElemId>(a), static_cast<ElemId>(b)},
              .least_generators = {},
              .note = "a*R*b lies in I while neither a nor b does"};
          break;
        }
      }
    }
    return rep;
  }

  // Ideal-pair properties: first failing pair in least-generator order
  // (= index order, see cache construction).
  for (std::size_t i = 0; i < k && !rep.witness; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!fails(i, j)) continue;
      std::string note;
      switch (prop) {
        case IdealProperty::Nilary:
        case IdealProperty::PNilary:
          note = "product of the two principal ideals lies in I; neither is "
                 "nilpotent mod I";
          break;
        case IdealProperty::RightPrimary:
          note = "V*W lies in I, V is not inside I, W is not nilpotent mod I";
          break;
        default:
          note = "V*W lies in I, W is not inside I, V is not nilpotent mod I";
          break;
      }
      rep.witness = ideal_pair_witness(pc, i, j, std::move(note));
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Radicals

Ideal pseudo_radical(const RingPtr& r, const Ideal& i, const EngineLimits& limits) {
  const auto& principals = distinct_principal_ideals(r, limits);
  SpanState s(*r, i);
  for (const Ideal& p : principals) {
    limits.poll();
    if (p.subset_of(i)) continue;
    if (ideal_nilpotency_mod(p, i, limits)) {
      for (const ElemId g : p.additive_generators()) s.absorb(g);
    }
  }
  auto gens = s.absorbed;
  return IdealBuilder::make(r, std::move(s.bits), std::move(gens),
                            std::move(s.absorbed));
}

Ideal prime_radical(const RingPtr& r, const EngineLimits& limits) {
  return pseudo_radical(r, zero_ideal(r), limits);
}

Ideal jacobson_radical(const RingPtr& r, const EngineLimits& limits) {
  const std::size_t n = r->size();
  if (n > limits.property_cap) {
    throw CapExceeded("property engine", n, limits.property_cap);
  }
  std::vector<char> has_right(n, 0), has_left(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if ((a & 0x3f) == 0) limits.poll();
    for (std::size_t b = 0; b < n; ++b) {
      if (r->mul(static_cast<ElemId>(a), static_cast<ElemId>(b)) == r->one()) {
        has_right[a] = 1;
        has_left[b] = 1;
      }
    }
  }
  boost::dynamic_bitset<> members(n);
  for (std::size_t x = 0; x < n; ++x) {
    if ((x & 0x3f) == 0) limits.poll();
    bool quasi = true;
    for (std::size_t a = 0; a < n; ++a) {
      const ElemId u =
          r->sub(r->one(), r->mul(static_cast<ElemId>(a), static_cast<ElemId>(x)));
      if (!has_right[u] || !has_left[u]) {
        quasi = false;
        break;
      }
    }
    if (quasi) members.set(x);
  }
  return ideal_from_members(r, members, {}, limits);
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

std::vector<Ideal> enumerate_all_ideals(const RingPtr& r,
                                        const EngineLimits& limits) {
  if (r->size() > limits.oracle_cap) {
    throw CapExceeded("oracle", r->size(), limits.oracle_cap);
  }
  std::vector<Ideal> all = distinct_principal_ideals(r, limits);
  std::set<Blocks> seen;
  for (const Ideal& p : all) seen.insert(to_blocks(p.bits()));
  // Join-closure: every ideal is the sum of the principal ideals of its
  // members, so closing principals under pairwise sums reaches all of them.
  for (std::size_t i = 0; i < all.size(); ++i) {
    limits.poll();
    for (std::size_t j = 0; j <= i; ++j) {
      Ideal s = ideal_sum(all[i], all[j], limits);
      if (seen.insert(to_blocks(s.bits())).second) {
        if (all.size() + 1 > limits.oracle_ideal_guard) {
          throw CapExceeded("ideal count", all.size() + 1,
                            limits.oracle_ideal_guard);
        }
        all.push_back(std::move(s));
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return all;
}

namespace {

// Independent nilpotency test: materialize the power chain V, V^2, ...
// without the +I trick used by the engine.
bool oracle_nilpotent_mod(const Ideal& v, const Ideal& i,
                          const EngineLimits& limits) {
  Ideal t = v;
  while (true) {
    if (t.subset_of(i)) return true;
    Ideal next = ideal_product(t, v, limits);
    if (next == t) return false;
    t = std::move(next);
    limits.poll();
  }
}

}  // namespace

bool exhaustive_property_oracle(const Ideal& ideal, IdealProperty prop,
                                const EngineLimits& limits) {
  const RingPtr& r = ideal.ring();
  const std::vector<Ideal>& pool = prop == IdealProperty::PNilary
                                       ? distinct_principal_ideals(r, limits)
                                       : enumerate_all_ideals(r, limits);

  if (prop == IdealProperty::Essential) {
    for (const Ideal& v : pool) {
      if (v.is_zero()) continue;
      if ((v.bits() & ideal.bits()).count() <= 1) return false;
    }
    return true;
  }

  std::vector<signed char> nilp_memo(pool.size(), -1);
  auto nilp = [&](std::size_t idx) -> bool {
    if (nilp_memo[idx] < 0) {
      nilp_memo[idx] = oracle_nilpotent_mod(pool[idx], ideal, limits) ? 1 : 0;
    }
    return nilp_memo[idx] == 1;
  };

  for (std::size_t i = 0; i < pool.size(); ++i) {
    limits.poll();
    if (prop == IdealProperty::Semiprime) {
      if (ideal_product(pool[i], pool[i], limits).subset_of(ideal) &&
          !pool[i].subset_of(ideal)) {
        return false;
      }
      continue;
    }
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!ideal_product(pool[i], pool[j], limits).subset_of(ideal)) continue;
      bool ok = true;
      switch (prop) {
        case IdealProperty::Prime:
          ok = pool[i].subset_of(ideal) || pool[j].subset_of(ideal);
          break;
        case IdealProperty::Nilary:
        case IdealProperty::PNilary:
          ok = nilp(i) || nilp(j);
          break;
        case IdealProperty::RightPrimary:
          ok = pool[i].subset_of(ideal) || nilp(j);
          break;
        case IdealProperty::LeftPrimary:
          ok = pool[j].subset_of(ideal) || nilp(i);
          break;
        default:
          break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace gring
