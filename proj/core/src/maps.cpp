#include "gring/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace gring {
namespace {

[[noreturn]] void hom_fail(const std::string& what) {
  throw std::invalid_argument("not a ring homomorphism: " + what);
}

}  // namespace

RingHom make_ring_hom(RingPtr source, RingPtr target, std::vector<ElemId> map,
                      const EngineLimits& limits) {
  if (map.size() != source->size()) {
    throw std::invalid_argument("homomorphism table has wrong size");
  }
  for (const ElemId v : map) {
    if (v >= target->size()) {
      throw std::invalid_argument("homomorphism value out of range");
    }
  }
  if (map[source->zero()] != target->zero()) hom_fail("0 -> 0");
  if (map[source->one()] != target->one()) hom_fail("1 -> 1");

  const std::size_t n = source->size();
  if (n <= limits.table_cap) {
    for (std::size_t a = 0; a < n; ++a) {
      limits.poll();
      for (std::size_t b = 0; b < n; ++b) {
        const auto x = static_cast<ElemId>(a), y = static_cast<ElemId>(b);
        if (map[source->add(x, y)] != target->add(map[x], map[y])) {
          hom_fail("additivity at (" + source->label(x) + ", " +
                   source->label(y) + ")");
        }
        if (map[source->mul(x, y)] != target->mul(map[x], map[y])) {
          hom_fail("multiplicativity at (" + source->label(x) + ", " +
                   source->label(y) + ")");
        }
      }
    }
  } else {
    // phi(x + s) = phi(x) + phi(s) for all x and additive generators s gives
    // full additivity by induction on the generator expansion of the second
    // argument; multiplicativity then follows from generator pairs by
    // bilinearity.
    const auto gens = source->additive_generators();
    for (std::size_t a = 0; a < n; ++a) {
      if ((a & 0xfff) == 0) limits.poll();
      const auto x = static_cast<ElemId>(a);
      for (const ElemId s : gens) {
        if (map[source->add(x, s)] != target->add(map[x], map[s])) {
          hom_fail("additivity at (" + source->label(x) + ", " +
                   source->label(s) + ")");
        }
      }
    }
    for (const ElemId s : gens) {
      for (const ElemId t : gens) {
        if (map[source->mul(s, t)] != target->mul(map[s], map[t])) {
          hom_fail("multiplicativity at (" + source->label(s) + ", " +
                   source->label(t) + ")");
        }
      }
    }
  }

  RingHom hom;
  hom.source = std::move(source);
  hom.target = std::move(target);
  boost::dynamic_bitset<> hit(hom.target->size());
  for (const ElemId v : map) hit.set(v);
  hom.surjective = hit.count() == hom.target->size();
  hom.map = std::move(map);
  return hom;
}

Ideal hom_kernel(const RingHom& hom, const EngineLimits& limits) {
  boost::dynamic_bitset<> members(hom.source->size());
  for (std::size_t x = 0; x < hom.map.size(); ++x) {
    if (hom.map[x] == hom.target->zero()) members.set(x);
  }
  return ideal_from_members(hom.source, members, {}, limits);
}

RingPtr quotient_ring(const RingPtr& r, const Ideal& i,
                      const EngineLimits& limits) {
  std::vector<ElemId> gens(i.generators().begin(), i.generators().end());
  return make_quotient_ring(r, i.members(), std::move(gens), limits);
}

AdditiveSpan ring_multiples(const RingPtr& r, ElemId x, bool left) {
  std::vector<ElemId> gens;
  gens.reserve(r->additive_generators().size());
  for (const ElemId s : r->additive_generators()) {
    gens.push_back(left ? r->mul(s, x) : r->mul(x, s));
  }
  return additive_span(r, gens);
}

// ---------------------------------------------------------------------------
// Group-ring structure maps

RingHom augmentation(const GroupRingContext& ctx, const EngineLimits& limits) {
  const std::size_t n = ctx.ring->size();
  const std::size_t order = ctx.group->order();
  std::vector<ElemId> map(n);
  std::vector<ElemId> coeffs(order);
  for (std::size_t x = 0; x < n; ++x) {
    ctx.decode(static_cast<ElemId>(x), coeffs);
    ElemId acc = ctx.coeff->zero();
    for (const ElemId c : coeffs) acc = ctx.coeff->add(acc, c);
    map[x] = acc;
  }
  return make_ring_hom(ctx.ring, ctx.coeff, std::move(map), limits);
}

RingHom relative_augmentation(const GroupRingContext& ctx, const Subgroup& h,
                              const EngineLimits& limits) {
  if (!h.normal) {
    throw std::invalid_argument("relative augmentation needs a normal subgroup");
  }
  QuotientGroup q = quotient_group(*ctx.group, h);
  auto qgroup = std::make_shared<const GroupTable>(std::move(q.group));
  RingPtr target = make_group_ring(ctx.coeff, qgroup, limits);
  const GroupRingContext tctx = *group_ring_context(target);

  const std::size_t n = ctx.ring->size();
  std::vector<ElemId> map(n);
  std::vector<ElemId> coeffs(ctx.group->order());
  std::vector<ElemId> folded(qgroup->order());
  for (std::size_t x = 0; x < n; ++x) {
    ctx.decode(static_cast<ElemId>(x), coeffs);
    std::fill(folded.begin(), folded.end(), ctx.coeff->zero());
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
      ElemId& slot = folded[q.projection[g]];
      slot = ctx.coeff->add(slot, coeffs[g]);
    }
    map[x] = tctx.encode(folded);
  }
  return make_ring_hom(ctx.ring, std::move(target), std::move(map), limits);
}

namespace {

// {1 - h : h in hs, h != identity} as ring elements.
std::vector<ElemId> one_minus_gens(const GroupRingContext& ctx,
                                   std::span<const ElemId> hs) {
  std::vector<ElemId> gens;
  for (const ElemId h : hs) {
    if (h == ctx.group->identity()) continue;
    gens.push_back(ctx.ring->sub(ctx.ring->one(), ctx.group_elem(h)));
  }
  return gens;
}

boost::dynamic_bitset<> augmentation_members(const GroupRingContext& ctx) {
  const std::size_t n = ctx.ring->size();
  boost::dynamic_bitset<> members(n);
  std::vector<ElemId> coeffs(ctx.group->order());
  for (std::size_t x = 0; x < n; ++x) {
    ctx.decode(static_cast<ElemId>(x), coeffs);
    ElemId acc = ctx.coeff->zero();
    for (const ElemId c : coeffs) acc = ctx.coeff->add(acc, c);
    if (acc == ctx.coeff->zero()) members.set(x);
  }
  return members;
}

}  // namespace

Ideal augmentation_ideal(const GroupRingContext& ctx, const EngineLimits& limits) {
  auto members = augmentation_members(ctx);
  std::vector<ElemId> all_g(ctx.group->order());
  for (std::size_t g = 0; g < all_g.size(); ++g) all_g[g] = static_cast<ElemId>(g);
  auto gens = one_minus_gens(ctx, all_g);
  Ideal closed = ideal_closure(ctx.ring, gens, limits);
  if (closed.bits() != members) {
    throw std::logic_error("augmentation ideal disagrees with its generators");
  }
  return ideal_from_members(ctx.ring, members, std::move(gens), limits);
}

AdditiveSpan relative_augmentation_span(const GroupRingContext& ctx,
                                        const Subgroup& h) {
  std::vector<ElemId> gens;
  const auto base = one_minus_gens(ctx, h.members);
  for (const ElemId u : base) {
    for (std::size_t g = 0; g < ctx.group->order(); ++g) {
      const ElemId ug = ctx.ring->mul(u, ctx.group_elem(static_cast<ElemId>(g)));
      for (const ElemId a : ctx.coeff->additive_generators()) {
        gens.push_back(ctx.ring->mul(ctx.scalar(a), ug));
      }
    }
  }
  return additive_span(ctx.ring, gens);
}

Ideal relative_augmentation_ideal(const GroupRingContext& ctx, const Subgroup& h,
                                  const EngineLimits& limits) {
  if (!h.normal) {
    throw std::invalid_argument(
        "relative augmentation ideal needs a normal subgroup");
  }
  const RingHom eps = relative_augmentation(ctx, h, limits);
  Ideal kernel = hom_kernel(eps, limits);

  auto gens = one_minus_gens(ctx, h.members);
  const Ideal closed = ideal_closure(ctx.ring, gens, limits);
  const AdditiveSpan right = relative_augmentation_span(ctx, h);

  // g(1-h) span: for normal H it must agree with the (1-h)g span.
  std::vector<ElemId> left_gens;
  for (const ElemId u : gens) {
    for (std::size_t g = 0; g < ctx.group->order(); ++g) {
      const ElemId gu = ctx.ring->mul(ctx.group_elem(static_cast<ElemId>(g)), u);
      for (const ElemId a : ctx.coeff->additive_generators()) {
        left_gens.push_back(ctx.ring->mul(ctx.scalar(a), gu));
      }
    }
  }
  const AdditiveSpan left = additive_span(ctx.ring, left_gens);

  if (closed.bits() != kernel.bits() || right.members != kernel.bits() ||
      left.members != kernel.bits()) {
    throw std::logic_error("relative augmentation ideal readings disagree");
  }
  return ideal_from_members(ctx.ring, kernel.bits(), std::move(gens), limits);
}

ElemId subgroup_sum(const GroupRingContext& ctx, const Subgroup& h) {
  std::vector<ElemId> coeffs(ctx.group->order(), ctx.coeff->zero());
  for (const ElemId g : h.members) coeffs[g] = ctx.coeff->one();
  return ctx.encode(coeffs);
}

bool central_element(const RingPtr& r, ElemId x) {
  for (const ElemId m : r->multiplier_generators()) {
    if (r->mul(x, m) != r->mul(m, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subrings and coefficient extensions

SubringEmbedding group_subring(const GroupRingContext& ctx, const Subgroup& h,
                               const EngineLimits& limits) {
  SubgroupAsGroup sag = subgroup_as_group(*ctx.group, h);
  auto hgroup = std::make_shared<const GroupTable>(std::move(sag.group));
  RingPtr sub = make_group_ring(ctx.coeff, hgroup, limits);
  const GroupRingContext sub_ctx = *group_ring_context(sub);

  std::vector<ElemId> to_parent(sub->size());
  std::vector<ElemId> small(hgroup->order());
  std::vector<ElemId> big(ctx.group->order());
  for (std::size_t y = 0; y < sub->size(); ++y) {
    sub_ctx.decode(static_cast<ElemId>(y), small);
    std::fill(big.begin(), big.end(), ctx.coeff->zero());
    for (std::size_t i = 0; i < small.size(); ++i) {
      big[sag.to_parent[i]] = small[i];
    }
    to_parent[y] = ctx.encode(big);
  }
  // The support embedding is a verified injective homomorphism.
  (void)make_ring_hom(sub, ctx.ring, to_parent, limits);
  return SubringEmbedding{std::move(sub), sub_ctx, std::move(to_parent)};
}

Ideal restrict_ideal(const Ideal& j, const SubringEmbedding& emb,
                     const EngineLimits& limits) {
  boost::dynamic_bitset<> members(emb.sub->size());
  for (std::size_t y = 0; y < emb.sub->size(); ++y) {
    if (j.contains(emb.to_parent[y])) members.set(y);
  }
  return ideal_from_members(emb.sub, members, {}, limits);
}

Ideal extend_subring_ideal(const GroupRingContext& ctx,
                           const SubringEmbedding& emb, const Ideal& i,
                           const EngineLimits& limits) {
  std::vector<ElemId> gens;
  gens.reserve(i.additive_generators().size());
  for (const ElemId s : i.additive_generators()) {
    gens.push_back(emb.to_parent[s]);
  }
  return ideal_closure(ctx.ring, gens, limits);
}

Ideal extend_coefficient_ideal(const GroupRingContext& ctx, const Ideal& i,
                               const EngineLimits& limits) {
  if (i.ring() != ctx.coeff) {
    throw std::invalid_argument("coefficient ideal lives in the wrong ring");
  }
  const std::size_t n = ctx.ring->size();
  boost::dynamic_bitset<> members(n);
  std::vector<ElemId> coeffs(ctx.group->order());
  for (std::size_t x = 0; x < n; ++x) {
    ctx.decode(static_cast<ElemId>(x), coeffs);
    bool all_in = true;
    for (const ElemId c : coeffs) {
      if (!i.contains(c)) {
        all_in = false;
        break;
      }
    }
    if (all_in) members.set(x);
  }
  std::vector<ElemId> gens;
  for (const ElemId s : i.generators()) gens.push_back(ctx.scalar(s));
  const Ideal closed = ideal_closure(ctx.ring, gens, limits);
  if (closed.bits() != members) {
    throw std::logic_error(
        "extended coefficient ideal disagrees with its generators");
  }
  return ideal_from_members(ctx.ring, members, std::move(gens), limits);
}

RingHom coefficient_quotient_hom(const GroupRingContext& ctx, const Ideal& i,
                                 const EngineLimits& limits) {
  RingPtr aq = quotient_ring(ctx.coeff, i, limits);
  const auto* qprov = std::get_if<QuotientProv>(&aq->provenance());
  RingPtr target = make_group_ring(aq, ctx.group, limits);
  const GroupRingContext tctx = *group_ring_context(target);

  const std::size_t n = ctx.ring->size();
  std::vector<ElemId> map(n);
  std::vector<ElemId> coeffs(ctx.group->order());
  std::vector<ElemId> reduced(ctx.group->order());
  for (std::size_t x = 0; x < n; ++x) {
    ctx.decode(static_cast<ElemId>(x), coeffs);
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
      reduced[g] = qprov->to_rep[coeffs[g]];
    }
    map[x] = tctx.encode(reduced);
  }
  return make_ring_hom(ctx.ring, std::move(target), std::move(map), limits);
}

}  // namespace gring
