#include "gring/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace gring {
namespace {

using nlohmann::json;

std::optional<unsigned> prime_power_of(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;  // first divisor > 1 of n, necessarily prime
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<unsigned>(p);
}

unsigned prime_power_exponent(std::uint64_t n, unsigned p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_prime(std::uint64_t n) {
  auto p = prime_power_of(n);
  return p && *p == n;
}

// k·1 nilpotent in a.
bool int_nilpotent(const RingPtr& a, std::uint64_t k) {
  return a->nilpotency_index(a->int_mul(k, a->one())).has_value();
}

bool ring_is(const RingPtr& r, IdealProperty p, const EngineLimits& lm) {
  return check_ideal_property(zero_ideal(r), p, lm).holds;
}

json subgroup_json(const GroupTable& g, const Subgroup& h) {
  json j;
  j["order"] = h.order();
  j["normal"] = h.normal;
  std::vector<std::string> labels;
  labels.reserve(h.members.size());
  for (ElemId m : h.members) labels.push_back(g.label(m));
  j["members"] = labels;
  return j;
}

json ideal_json(const Ideal& id) {
  json j;
  j["size"] = id.size();
  std::vector<ElemId> gens(id.generators().begin(), id.generators().end());
  j["generators"] = gens;
  std::vector<std::string> labels;
  for (ElemId x : gens) labels.push_back(id.ring()->label(x));
  j["generator_labels"] = labels;
  return j;
}

json witness_json(const RingPtr& r, const PropertyWitness& w) {
  json j;
  j["kind"] = w.kind;
  j["elements"] = w.elements;
  std::vector<std::string> labels;
  for (ElemId x : w.elements) labels.push_back(r->label(x));
  j["element_labels"] = labels;
  if (!w.least_generators.empty()) {
    j["least_generators"] = w.least_generators;
    std::vector<std::string> glabels;
    for (ElemId x : w.least_generators) glabels.push_back(r->label(x));
    j["least_generator_labels"] = glabels;
  }
  j["note"] = w.note;
  return j;
}

void append_note(std::string& note, const std::string& extra) {
  if (extra.empty()) return;
  if (!note.empty()) note += "; ";
  note += extra;
}

struct CheckOutcome {
  bool applicable = true;
  std::optional<bool> hypothesis;
  std::optional<bool> conclusion;
  json witness;  // null by default
  std::string note;
};

CheckOutcome not_applicable(std::string why) {
  CheckOutcome oc;
  oc.applicable = false;
  oc.note = std::move(why);
  return oc;
}

// Group-ring checks need A[G] with |G| > 1; A[C1] degenerates to A.
const GroupRingContext* group_ring_of(Instance& inst, CheckOutcome& bail) {
  const auto& ctx = inst.group_ctx();
  if (!ctx) {
    bail = not_applicable("not a group ring instance");
    return nullptr;
  }
  if (ctx->group->order() < 2) {
    bail = not_applicable("group is trivial");
    return nullptr;
  }
  return &*ctx;
}

bool prop_of(Instance& inst, const Ideal& id, IdealProperty p) {
  if (id.is_zero()) return inst.property(p).holds;
  return check_ideal_property(id, p, inst.limits()).holds;
}

// Quantification pool for per-ideal checks: every ideal below the oracle
// cap, otherwise principal ideals (truncated to the smallest least
// generators so mid-size rings stay tractable), regime recorded.
struct IdealFamily {
  std::vector<Ideal> ideals;
  std::string regime;
};

IdealFamily ideal_family(Instance& inst, std::size_t principal_truncate) {
  const EngineLimits& lm = inst.limits();
  IdealFamily f;
  if (inst.ring()->size() <= lm.oracle_cap) {
    f.ideals = enumerate_all_ideals(inst.ring(), lm);
    f.regime = "all-ideals";
    return f;
  }
  const auto& pr = distinct_principal_ideals(inst.ring(), lm);
  f.ideals.assign(pr.begin(), pr.end());
  f.regime = "principal";
  if (principal_truncate != 0 && f.ideals.size() > principal_truncate) {
    f.ideals.resize(principal_truncate);
    f.regime = "principal-truncated";
  }
  return f;
}

std::vector<Subgroup> central_subgroups(const GroupTable& g,
                                        const EngineLimits& lm) {
  Subgroup z = center(g);
  std::vector<Subgroup> out;
  for (Subgroup& h : all_subgroups(g, lm)) {
    bool central = std::includes(z.members.begin(), z.members.end(),
                                 h.members.begin(), h.members.end());
    if (central) out.push_back(std::move(h));
  }
  return out;
}

using Blocks = std::vector<boost::dynamic_bitset<>::block_type>;

Blocks blocks_of(const boost::dynamic_bitset<>& bits) {
  Blocks b(bits.num_blocks());
  boost::to_block_range(bits, b.begin());
  return b;
}

// ---------------------------------------------------------------------------
// The checks

CheckOutcome c_aug_ideal_nilpotency(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  auto nil = ideal_nilpotency_index(inst.aug_ideal(), lm);
  auto pg = group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm);
  bool rhs = pg.value && pg.prime && int_nilpotent(ctx->coeff, *pg.prime);
  oc.hypothesis = nil.has_value();
  oc.conclusion = rhs;
  if (nil) oc.note = "nilpotency index " + std::to_string(*nil);
  if (*oc.hypothesis != rhs) {
    json w;
    w["aug_ideal_nilpotent"] = nil.has_value();
    if (nil) w["nilpotency_index"] = *nil;
    w["group_is_p_group"] = pg.value;
    if (pg.prime) {
      w["p"] = *pg.prime;
      w["p_nilpotent_in_coefficients"] = int_nilpotent(ctx->coeff, *pg.prime);
    }
    oc.witness = w;
  }
  return oc;
}

CheckOutcome c_rel_aug_nilpotency(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const GroupTable& g = *ctx->group;
  std::size_t checked = 0;
  for (const Subgroup& h : normal_subgroups(g, lm)) {
    if (h.is_trivial()) continue;
    Ideal d = relative_augmentation_ideal(*ctx, h, lm);
    bool lhs = ideal_nilpotency_index(d, lm).has_value();
    auto p = prime_power_of(h.order());
    bool rhs = p && int_nilpotent(ctx->coeff, *p);
    if (lhs != rhs) {
      oc.conclusion = false;
      json w = subgroup_json(g, h);
      w["relative_aug_ideal_nilpotent"] = lhs;
      w["subgroup_is_p_group"] = p.has_value();
      if (p) w["p_nilpotent_in_coefficients"] = int_nilpotent(ctx->coeff, *p);
      oc.witness = w;
      oc.note = "nilpotency equivalence fails for this normal subgroup";
      return oc;
    }
    ++checked;
  }
  oc.conclusion = true;
  oc.note = "verified on " + std::to_string(checked) + " nontrivial normal subgroups";
  return oc;
}

CheckOutcome c_rel_aug_annihilator(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const RingPtr& r = inst.ring();
  const GroupTable& g = *ctx->group;
  std::size_t checked = 0;
  for (const Subgroup& h : all_subgroups(g, lm)) {
    if (h.is_trivial()) continue;
    lm.poll();
    AdditiveSpan span = relative_augmentation_span(*ctx, h);
    ElemId hsum = subgroup_sum(*ctx, h);
    auto lann = annihilator(r, span.add_gens, /*left=*/true, lm);
    AdditiveSpan lmul = ring_multiples(r, hsum, /*left=*/true);  // A[G]*Hsum
    std::string why;
    bool ok = lann.members == lmul.members;
    if (!ok) why = "left annihilator differs from A[G]*Hsum";
    if (ok && lann.members.count() <= 1) {
      ok = false;
      why = "left annihilator is zero";
    }
    if (ok && h.normal) {
      auto rann = annihilator(r, span.add_gens, /*left=*/false, lm);
      AdditiveSpan rmul = ring_multiples(r, hsum, /*left=*/false);  // Hsum*A[G]
      ok = rann.members == rmul.members && rann.members == lann.members &&
           central_element(r, hsum);
      if (!ok) why = "two-sided annihilator identities fail for a normal subgroup";
    }
    if (!ok) {
      oc.conclusion = false;
      json w = subgroup_json(g, h);
      w["left_annihilator_size"] = lann.members.count();
      w["multiples_size"] = lmul.members.count();
      oc.witness = w;
      oc.note = why;
      return oc;
    }
    ++checked;
  }
  oc.conclusion = true;
  oc.note = "verified on " + std::to_string(checked) + " nontrivial subgroups";
  return oc;
}

CheckOutcome c_aug_annihilator_pair(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const RingPtr& r = inst.ring();
  const RingPtr& a = ctx->coeff;
  const Ideal& d = inst.aug_ideal();
  auto lann = annihilator(r, d.additive_generators(), /*left=*/true, lm);
  auto rann = annihilator(r, d.additive_generators(), /*left=*/false, lm);
  ElemId gsum = subgroup_sum(*ctx, whole_subgroup(*ctx->group));
  boost::dynamic_bitset<> expect(r->size()), torsion(r->size());
  const std::uint64_t n = ctx->group->order();
  for (ElemId c = 0; c < a->size(); ++c) {
    ElemId scaled = r->mul(ctx->scalar(c), gsum);  // c·(sum of G)
    expect.set(scaled);
    if (a->int_mul(n, c) == a->zero()) torsion.set(scaled);
  }
  bool ok = lann.members == expect && rann.members == expect &&
            (d.bits() & lann.members) == torsion;
  oc.conclusion = ok;
  if (!ok) {
    json w;
    w["left_annihilator_size"] = lann.members.count();
    w["right_annihilator_size"] = rann.members.count();
    w["scaled_group_sum_count"] = expect.count();
    w["torsion_count"] = torsion.count();
    w["intersection_count"] = (d.bits() & lann.members).count();
    oc.witness = w;
    oc.note = "annihilator of the augmentation ideal differs from the scaled group sums";
  } else {
    oc.note = "annihilator has " + std::to_string(expect.count()) + " elements";
  }
  return oc;
}

CheckOutcome c_central_extension_products(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  std::size_t subgroups_checked = 0, pairs = 0;
  std::string regimes;
  for (const Subgroup& h : central_subgroups(*ctx->group, lm)) {
    SubringEmbedding emb = group_subring(*ctx, h, lm);
    std::vector<Ideal> fam;
    bool complete = emb.sub->size() <= lm.oracle_cap;
    std::string regime;
    if (complete) {
      fam = enumerate_all_ideals(emb.sub, lm);
      regime = "all-ideals";
    } else {
      const auto& pr = distinct_principal_ideals(emb.sub, lm);
      fam.assign(pr.begin(), pr.end());
      regime = "principal";
      if (fam.size() > 24) {
        fam.resize(24);
        regime = "principal-truncated";
      }
    }
    append_note(regimes, "|H|=" + std::to_string(h.order()) + ":" + regime);
    std::map<Blocks, std::size_t> by_bits;
    std::vector<Ideal> ext;
    ext.reserve(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      ext.push_back(extend_subring_ideal(*ctx, emb, fam[i], lm));
      if (complete) by_bits.emplace(blocks_of(fam[i].bits()), i);
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = 0; j < fam.size(); ++j) {
        lm.poll();
        Ideal prod_sub = ideal_product(fam[i], fam[j], lm);
        Ideal lhs = complete
                        ? ext[by_bits.at(blocks_of(prod_sub.bits()))]
                        : extend_subring_ideal(*ctx, emb, prod_sub, lm);
        Ideal rhs = ideal_product(ext[i], ext[j], lm);
        if (!(lhs == rhs)) {
          oc.conclusion = false;
          json w = subgroup_json(*ctx->group, h);
          w["left_ideal"] = ideal_json(fam[i]);
          w["right_ideal"] = ideal_json(fam[j]);
          w["extended_product_size"] = lhs.size();
          w["product_of_extensions_size"] = rhs.size();
          oc.witness = w;
          oc.note = "extension does not commute with this ideal product";
          return oc;
        }
        ++pairs;
      }
    }
    ++subgroups_checked;
  }
  oc.conclusion = true;
  oc.note = std::to_string(subgroups_checked) + " central subgroups, " +
            std::to_string(pairs) + " ideal pairs (" + regimes + ")";
  return oc;
}

CheckOutcome c_radical_equals_aug_ideal(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  Ideal rad = pseudo_radical(inst.ring(), inst.zero(), lm);
  bool lhs = rad == inst.aug_ideal();
  std::uint64_t ch = ctx->coeff->characteristic();
  auto pg = group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm);
  bool rhs = ring_is(ctx->coeff, IdealProperty::Semiprime, lm) && is_prime(ch) &&
             pg.value && pg.prime && *pg.prime == ch;
  oc.hypothesis = lhs;
  oc.conclusion = rhs;
  if (lhs != rhs) {
    json w;
    w["pseudo_radical_size"] = rad.size();
    w["aug_ideal_size"] = inst.aug_ideal().size();
    w["characteristic"] = ch;
    w["coefficients_semiprime"] = ring_is(ctx->coeff, IdealProperty::Semiprime, lm);
    w["group_is_p_group"] = pg.value;
    oc.witness = w;
  }
  return oc;
}

CheckOutcome c_group_ring_never_prime(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const PropertyReport& rep = inst.property(IdealProperty::Prime);
  oc.conclusion = !rep.holds;
  if (!rep.holds && rep.witness) {
    oc.note = "prime fails at elements " + inst.ring()->label(rep.witness->elements[0]) +
              ", " + inst.ring()->label(rep.witness->elements[1]);
  } else if (rep.holds) {
    oc.note = "the zero ideal came out prime";
  }
  return oc;
}

CheckOutcome c_prime_vs_semiprime_nilary(Instance& inst) {
  CheckOutcome oc;
  const EngineLimits& lm = inst.limits();
  std::vector<Ideal> fam;
  std::string regime = "zero-ideal";
  if (inst.ring()->size() <= lm.oracle_cap) {
    fam = enumerate_all_ideals(inst.ring(), lm);
    regime = "all-ideals";
  } else {
    fam.push_back(inst.zero());
  }
  for (const Ideal& id : fam) {
    lm.poll();
    bool pr = prop_of(inst, id, IdealProperty::Prime);
    bool sp = prop_of(inst, id, IdealProperty::Semiprime);
    bool ni = prop_of(inst, id, IdealProperty::Nilary);
    bool pn = prop_of(inst, id, IdealProperty::PNilary);
    if (pr != (sp && ni) || pr != (sp && pn)) {
      oc.conclusion = false;
      json w = ideal_json(id);
      w["prime"] = pr;
      w["semiprime"] = sp;
      w["nilary"] = ni;
      w["p_nilary"] = pn;
      oc.witness = w;
      oc.note = "prime disagrees with semiprime+nilary at this ideal";
      return oc;
    }
  }
  oc.conclusion = true;
  oc.note = std::to_string(fam.size()) + " ideals (" + regime + ")";
  return oc;
}

CheckOutcome c_quotient_ring_criterion(Instance& inst) {
  CheckOutcome oc;
  const EngineLimits& lm = inst.limits();
  IdealFamily fam = ideal_family(inst, 16);
  for (const Ideal& id : fam.ideals) {
    lm.poll();
    bool ni = prop_of(inst, id, IdealProperty::Nilary);
    bool pn = prop_of(inst, id, IdealProperty::PNilary);
    RingPtr q = quotient_ring(inst.ring(), id, lm);
    bool qni = ring_is(q, IdealProperty::Nilary, lm);
    bool qpn = ring_is(q, IdealProperty::PNilary, lm);
    if (ni != qni || pn != qpn) {
      oc.conclusion = false;
      json w = ideal_json(id);
      w["ideal_nilary"] = ni;
      w["quotient_ring_nilary"] = qni;
      w["ideal_p_nilary"] = pn;
      w["quotient_ring_p_nilary"] = qpn;
      oc.witness = w;
      oc.note = "ideal verdict disagrees with the quotient ring";
      return oc;
    }
  }
  oc.conclusion = true;
  oc.note = std::to_string(fam.ideals.size()) + " ideals (" + fam.regime + ")";
  return oc;
}

CheckOutcome c_nilpotent_lift(Instance& inst) {
  CheckOutcome oc;
  const EngineLimits& lm = inst.limits();
  IdealFamily fam = ideal_family(inst, 16);
  Ideal rad0 = pseudo_radical(inst.ring(), inst.zero(), lm);
  std::size_t armed = 0;
  for (const Ideal& id : fam.ideals) {
    lm.poll();
    RingPtr q = quotient_ring(inst.ring(), id, lm);
    if (ring_is(q, IdealProperty::Nilary, lm) &&
        ideal_nilpotency_index(id, lm).has_value()) {
      ++armed;
      if (!inst.property(IdealProperty::Nilary).holds) {
        oc.conclusion = false;
        oc.witness = ideal_json(id);
        oc.note = "quotient nilary and ideal nilpotent, but the ring is not nilary";
        return oc;
      }
    }
    if (ring_is(q, IdealProperty::PNilary, lm) &&
        pseudo_radical(inst.ring(), id, lm) == rad0) {
      ++armed;
      if (!inst.property(IdealProperty::PNilary).holds) {
        oc.conclusion = false;
        oc.witness = ideal_json(id);
        oc.note = "quotient p-nilary with matching pseudo radical, but the ring is not p-nilary";
        return oc;
      }
    }
  }
  oc.conclusion = true;
  oc.note = "antecedent armed " + std::to_string(armed) + " times over " +
            std::to_string(fam.ideals.size()) + " ideals (" + fam.regime + ")";
  return oc;
}

CheckOutcome c_central_restriction_descends(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  IdealFamily fam = ideal_family(inst, 16);
  std::size_t armed = 0;
  for (const Subgroup& h : central_subgroups(*ctx->group, lm)) {
    SubringEmbedding emb = group_subring(*ctx, h, lm);
    for (const Ideal& j : fam.ideals) {
      lm.poll();
      if (!prop_of(inst, j, IdealProperty::Nilary)) continue;
      ++armed;
      Ideal rj = restrict_ideal(j, emb, lm);
      if (!check_ideal_property(rj, IdealProperty::Nilary, lm).holds ||
          !check_ideal_property(rj, IdealProperty::PNilary, lm).holds) {
        oc.conclusion = false;
        json w = subgroup_json(*ctx->group, h);
        w["ideal"] = ideal_json(j);
        w["restriction_size"] = rj.size();
        oc.witness = w;
        oc.note = "restriction of a nilary ideal is not nilary";
        return oc;
      }
    }
  }
  oc.conclusion = true;
  oc.note = "antecedent armed " + std::to_string(armed) + " times (" + fam.regime + ")";
  return oc;
}

CheckOutcome c_central_subring_descends(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds;
  bool all = true;
  json bad;
  for (const Subgroup& h : central_subgroups(*ctx->group, lm)) {
    SubringEmbedding emb = group_subring(*ctx, h, lm);
    if (!ring_is(emb.sub, IdealProperty::Nilary, lm) ||
        !ring_is(emb.sub, IdealProperty::PNilary, lm)) {
      all = false;
      bad = subgroup_json(*ctx->group, h);
      break;
    }
  }
  oc.conclusion = all;
  if (!all) {
    oc.witness = bad;
    oc.note = "A[H] is not nilary for this central subgroup";
  }
  return oc;
}

CheckOutcome c_coefficients_descend(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds;
  oc.conclusion = ring_is(ctx->coeff, IdealProperty::Nilary, lm) &&
                  ring_is(ctx->coeff, IdealProperty::PNilary, lm);
  return oc;
}

CheckOutcome c_aug_ideal_criterion(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  bool lhs = ring_is(ctx->coeff, IdealProperty::Nilary, lm);
  bool rhs = check_ideal_property(inst.aug_ideal(), IdealProperty::Nilary, lm).holds;
  bool lhs_p = ring_is(ctx->coeff, IdealProperty::PNilary, lm);
  bool rhs_p = check_ideal_property(inst.aug_ideal(), IdealProperty::PNilary, lm).holds;
  oc.hypothesis = lhs && lhs_p;
  oc.conclusion = rhs && rhs_p;
  if (lhs != lhs_p || rhs != rhs_p) {
    // the two flavors coincide on finite rings; a split is an engine defect
    throw std::logic_error("nilary flavors disagree");
  }
  return oc;
}

CheckOutcome c_quotient_group_criterion(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const GroupTable& g = *ctx->group;
  std::size_t checked = 0;
  for (const Subgroup& h : normal_subgroups(g, lm)) {
    lm.poll();
    Ideal d = relative_augmentation_ideal(*ctx, h, lm);
    bool lhs = check_ideal_property(d, IdealProperty::Nilary, lm).holds;
    GroupPtr qg = std::make_shared<const GroupTable>(quotient_group(g, h).group);
    RingPtr qr = make_group_ring(ctx->coeff, qg, lm);
    bool rhs = ring_is(qr, IdealProperty::Nilary, lm);
    if (lhs != rhs) {
      oc.conclusion = false;
      json w = subgroup_json(g, h);
      w["relative_aug_ideal_nilary"] = lhs;
      w["quotient_group_ring_nilary"] = rhs;
      oc.witness = w;
      oc.note = "relative augmentation ideal disagrees with A[G/H]";
      return oc;
    }
    ++checked;
  }
  oc.conclusion = true;
  oc.note = "verified on " + std::to_string(checked) + " normal subgroups";
  return oc;
}

CheckOutcome c_normal_orders_nilpotent(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds;
  bool all = true;
  for (const Subgroup& h : normal_subgroups(*ctx->group, lm)) {
    if (h.is_trivial()) continue;
    if (!int_nilpotent(ctx->coeff, h.order())) {
      all = false;
      json w = subgroup_json(*ctx->group, h);
      w["order_nilpotent_in_coefficients"] = false;
      oc.witness = w;
      oc.note = "normal subgroup of order " + std::to_string(h.order()) +
                " whose order is not nilpotent in the coefficient ring";
      break;
    }
  }
  oc.conclusion = all;
  return oc;
}

CheckOutcome c_group_order_nilpotent(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds;
  bool coeff_ok = ring_is(ctx->coeff, IdealProperty::Nilary, lm);
  bool ord_ok = int_nilpotent(ctx->coeff, ctx->group->order());
  oc.conclusion = coeff_ok && ord_ok;
  if (!*oc.conclusion) {
    json w;
    w["coefficients_nilary"] = coeff_ok;
    w["group_order_nilpotent"] = ord_ok;
    oc.witness = w;
  }
  return oc;
}

CheckOutcome c_p_group_lift(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  auto pg = group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm);
  oc.hypothesis = ring_is(ctx->coeff, IdealProperty::Nilary, lm) && pg.value &&
                  pg.prime && int_nilpotent(ctx->coeff, *pg.prime);
  oc.conclusion = inst.property(IdealProperty::Nilary).holds &&
                  inst.property(IdealProperty::PNilary).holds;
  return oc;
}

CheckOutcome c_dedekind_forces_p_group(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  bool dede = group_predicate(*ctx->group, GroupPredicate::Dedekind, std::nullopt, lm).value;
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds && dede;
  oc.conclusion =
      group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm).value;
  return oc;
}

CheckOutcome c_pseudo_radical_lift(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  bool coeff_pn = ring_is(ctx->coeff, IdealProperty::PNilary, lm);
  bool radicals_match =
      pseudo_radical(inst.ring(), inst.aug_ideal(), lm) ==
      pseudo_radical(inst.ring(), inst.zero(), lm);
  oc.hypothesis = coeff_pn && radicals_match;
  oc.conclusion = inst.property(IdealProperty::PNilary).holds;
  return oc;
}

CheckOutcome c_prime_field_p_group(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const auto* z = std::get_if<ZmodProv>(&ctx->coeff->provenance());
  bool prime_field = z && is_prime(z->modulus);
  bool pg = prime_field &&
            group_predicate(*ctx->group, GroupPredicate::PGroup,
                            static_cast<unsigned>(z->modulus), lm)
                .value;
  oc.hypothesis = prime_field && pg;
  oc.conclusion = inst.property(IdealProperty::Nilary).holds &&
                  inst.property(IdealProperty::PNilary).holds;
  return oc;
}

CheckOutcome c_primary_forces_p_group(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::RightPrimary).holds ||
                  inst.property(IdealProperty::LeftPrimary).holds;
  auto pg = group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm);
  oc.conclusion = pg.value && pg.prime && int_nilpotent(ctx->coeff, *pg.prime);
  return oc;
}

CheckOutcome c_primary_forces_p_group_sigma(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  // principal flavors; these coincide with the unrestricted ones here
  oc.hypothesis = inst.property(IdealProperty::RightPrimary).holds ||
                  inst.property(IdealProperty::LeftPrimary).holds;
  bool g_prime =
      group_predicate(*ctx->group, GroupPredicate::Prime, std::nullopt, lm).value;
  NuSigma ns = nu_sigma(*ctx->group, lm);
  auto p = prime_power_of(ns.sigma.order());
  oc.conclusion = g_prime || (p && int_nilpotent(ctx->coeff, *p));
  oc.note = "sigma(G) = G for a finite group";
  return oc;
}

CheckOutcome c_primary_nilary_agreement(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  const auto* z = std::get_if<ZmodProv>(&ctx->coeff->provenance());
  bool prime_field = z && is_prime(z->modulus);
  bool pg = prime_field &&
            group_predicate(*ctx->group, GroupPredicate::PGroup,
                            static_cast<unsigned>(z->modulus), lm)
                .value;
  oc.hypothesis = prime_field && pg;
  bool ni = inst.property(IdealProperty::Nilary).holds;
  bool rp = inst.property(IdealProperty::RightPrimary).holds;
  bool lp = inst.property(IdealProperty::LeftPrimary).holds;
  oc.conclusion = ni && rp && lp;
  if (!*oc.conclusion) {
    json w;
    w["nilary"] = ni;
    w["right_primary"] = rp;
    w["left_primary"] = lp;
    oc.witness = w;
  }
  return oc;
}

CheckOutcome c_essential_or_p_group(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const EngineLimits& lm = inst.limits();
  oc.hypothesis = inst.property(IdealProperty::Nilary).holds &&
                  prime_radical(ctx->coeff, lm).is_zero();
  bool essential =
      check_ideal_property(inst.aug_ideal(), IdealProperty::Essential, lm).holds;
  bool pg = group_predicate(*ctx->group, GroupPredicate::PGroup, std::nullopt, lm).value;
  oc.conclusion = essential || pg;
  return oc;
}

CheckOutcome c_idempotent_split(Instance& inst) {
  if (inst.expr() != "Z3[C6]")
    return not_applicable("example instance is Z3[C6] only");
  CheckOutcome oc;
  const RingPtr& r = inst.ring();
  const PropertyReport& rep = inst.property(IdealProperty::Nilary);
  bool ok = !rep.holds && rep.witness && rep.witness->kind == "ideal-pair" &&
            rep.witness->elements.size() == 2;
  if (ok) {
    ElemId e = rep.witness->elements[0];
    ElemId f = rep.witness->elements[1];
    ok = r->mul(e, e) == e && r->mul(f, f) == f && r->add(e, f) == r->one() &&
         r->mul(e, f) == r->zero() && r->mul(f, e) == r->zero();
    if (ok)
      oc.note = "witness pair e = " + r->label(e) + ", 1-e = " + r->label(f);
    else
      oc.note = "witness pair is not a complementary idempotent pair";
  } else {
    oc.note = "nilary did not fail with an ideal-pair witness";
  }
  oc.conclusion = ok;
  return oc;
}

CheckOutcome c_prime_power_moduli(Instance& inst) {
  const auto* z = std::get_if<ZmodProv>(&inst.ring()->provenance());
  if (!z) return not_applicable("modulus ring instances only");
  auto p = prime_power_of(z->modulus);
  if (!p) return not_applicable("modulus is not a prime power");
  CheckOutcome oc;
  unsigned k = prime_power_exponent(z->modulus, *p);
  bool ni = inst.property(IdealProperty::Nilary).holds &&
            inst.property(IdealProperty::PNilary).holds;
  bool pr = inst.property(IdealProperty::Prime).holds;
  oc.conclusion = ni && (pr == (k == 1));
  oc.note = "p = " + std::to_string(*p) + ", k = " + std::to_string(k);
  if (!*oc.conclusion) {
    json w;
    w["nilary"] = ni;
    w["prime"] = pr;
    w["k"] = k;
    oc.witness = w;
  }
  return oc;
}

CheckOutcome c_coefficient_quotient_extension(Instance& inst) {
  CheckOutcome oc;
  const GroupRingContext* ctx = group_ring_of(inst, oc);
  if (!ctx) return oc;
  const auto* z = std::get_if<ZmodProv>(&ctx->coeff->provenance());
  auto p = z ? prime_power_of(z->modulus) : std::nullopt;
  if (!p || prime_power_exponent(z->modulus, *p) < 2)
    return not_applicable("needs coefficients Z_{p^k} with k >= 2");
  const EngineLimits& lm = inst.limits();
  Ideal ip = principal_ideal(ctx->coeff, static_cast<ElemId>(*p), lm);
  RingHom hom = coefficient_quotient_hom(*ctx, ip, lm);
  Ideal ig = extend_coefficient_ideal(*ctx, ip, lm);
  Ideal ker = hom_kernel(hom, lm);
  bool pieces = hom.surjective && ker == ig &&
                hom.target->size() * ig.size() == inst.ring()->size() &&
                ideal_nilpotency_index(ig, lm).has_value();
  bool lift = true;
  if (pieces && ring_is(hom.target, IdealProperty::Nilary, lm))
    lift = inst.property(IdealProperty::Nilary).holds;
  oc.conclusion = pieces && lift;
  if (!*oc.conclusion) {
    json w;
    w["surjective"] = hom.surjective;
    w["kernel_is_extended_ideal"] = (ker == ig);
    w["extended_ideal_nilpotent"] = ideal_nilpotency_index(ig, lm).has_value();
    w["sizes_match"] = hom.target->size() * ig.size() == inst.ring()->size();
    oc.witness = w;
  } else {
    oc.note = "quotient has " + std::to_string(hom.target->size()) + " elements";
  }
  return oc;
}

struct CheckDef {
  const char* id;
  const char* statement;
  const char* mode;
  CheckOutcome (*run)(Instance&);
};

constexpr CheckDef kChecks[] = {
    {"aug-ideal-nilpotency",
     "The augmentation ideal of A[G] is nilpotent exactly when G is a p-group "
     "and p is nilpotent in A.",
     "equivalence", c_aug_ideal_nilpotency},
    {"rel-aug-nilpotency",
     "For every nontrivial normal subgroup H, the relative augmentation ideal "
     "is nilpotent exactly when H is a p-group and p is nilpotent in A.",
     "always", c_rel_aug_nilpotency},
    {"rel-aug-annihilator",
     "The left annihilator of the relative augmentation span of a nontrivial "
     "subgroup H is A[G]*Hsum and is nonzero; for normal H both annihilators "
     "agree and Hsum is central.",
     "always", c_rel_aug_annihilator},
    {"aug-annihilator-pair",
     "Both annihilators of the augmentation ideal equal {a*Gsum : a in A}, and "
     "its intersection with the augmentation ideal is {a*Gsum : |G|*a = 0}.",
     "always", c_aug_annihilator_pair},
    {"central-extension-products",
     "Extending ideals from A[H] to A[G] for central H commutes with ideal "
     "products.",
     "always", c_central_extension_products},
    {"radical-equals-aug-ideal",
     "The pseudo radical of A[G] equals the augmentation ideal exactly when A "
     "is semiprime of prime characteristic p and G is a p-group.",
     "equivalence", c_radical_equals_aug_ideal},
    {"group-ring-never-prime",
     "A group ring over a nontrivial group is never a prime ring.",
     "always", c_group_ring_never_prime},
    {"prime-vs-semiprime-nilary",
     "An ideal is prime exactly when it is semiprime and nilary (equivalently "
     "semiprime and principally nilary).",
     "always", c_prime_vs_semiprime_nilary},
    {"quotient-ring-criterion",
     "An ideal I is nilary exactly when the quotient ring R/I is a nilary "
     "ring, in both flavors.",
     "always", c_quotient_ring_criterion},
    {"nilpotent-lift",
     "If R/I is nilary and I is nilpotent then R is nilary; if R/I is "
     "principally nilary and the pseudo radical of I equals that of 0 then R "
     "is principally nilary.",
     "always", c_nilpotent_lift},
    {"central-restriction-descends",
     "For central H, intersecting a nilary ideal of A[G] with A[H] yields a "
     "nilary ideal of A[H].",
     "always", c_central_restriction_descends},
    {"central-subring-descends",
     "If A[G] is nilary then A[H] is a nilary ring for every central subgroup "
     "H.",
     "implication", c_central_subring_descends},
    {"coefficient-ring-descends",
     "If A[G] is nilary then A is nilary.",
     "implication", c_coefficients_descend},
    {"aug-ideal-criterion",
     "A is a nilary ring exactly when the augmentation ideal is a nilary "
     "ideal of A[G].",
     "equivalence", c_aug_ideal_criterion},
    {"quotient-group-criterion",
     "For normal H, the relative augmentation ideal is a nilary ideal exactly "
     "when A[G/H] is a nilary ring.",
     "always", c_quotient_group_criterion},
    {"normal-orders-nilpotent",
     "If A[G] is nilary then the order of every nontrivial finite normal "
     "subgroup is nilpotent in A.",
     "implication", c_normal_orders_nilpotent},
    {"group-order-nilpotent",
     "If A[G] is nilary with G finite then A is nilary and |G| is nilpotent "
     "in A.",
     "implication", c_group_order_nilpotent},
    {"p-group-lift",
     "If A is nilary, G is a p-group and p is nilpotent in A, then A[G] is "
     "nilary.",
     "implication", c_p_group_lift},
    {"dedekind-forces-p-group",
     "If A[G] is nilary and every subgroup of G is normal then G is a "
     "p-group.",
     "implication", c_dedekind_forces_p_group},
    {"pseudo-radical-lift",
     "If A is principally nilary and the pseudo radical of the augmentation "
     "ideal equals the pseudo radical of 0, then A[G] is principally nilary.",
     "implication", c_pseudo_radical_lift},
    {"prime-field-p-group",
     "Over a prime field of characteristic p, the group ring of a finite "
     "p-group is nilary and principally nilary.",
     "implication", c_prime_field_p_group},
    {"primary-forces-p-group",
     "If A[G] is right or left primary with G finite then G is a p-group and "
     "p is nilpotent in A.",
     "implication", c_primary_forces_p_group},
    {"primary-forces-p-group-sigma",
     "If A[G] is principally right or left primary then G is prime, or "
     "sigma(G) is a p-group with p nilpotent in A.",
     "implication", c_primary_forces_p_group_sigma},
    {"primary-nilary-agreement",
     "Over a prime field of characteristic p with G a finite p-group: nilary, "
     "right primary and left primary all hold and agree.",
     "implication", c_primary_nilary_agreement},
    {"essential-or-p-group",
     "If A[G] is nilary and A has zero prime radical then the augmentation "
     "ideal is essential or G is a p-group.",
     "implication", c_essential_or_p_group},
    {"idempotent-split",
     "Modulus-3 coefficients over the cyclic group of order 6 give a ring "
     "that is not nilary, witnessed by complementary central idempotents e "
     "and 1-e.",
     "always", c_idempotent_split},
    {"prime-power-moduli",
     "Integers modulo p^k form a nilary and principally nilary ring that is "
     "prime exactly when k = 1.",
     "always", c_prime_power_moduli},
    {"coefficient-quotient-extension",
     "For coefficients Z_{p^k} (k >= 2) and I = (p): A[G]/I[G] is isomorphic "
     "to (A/I)[G], I[G] is nilpotent, and nilary lifts from the quotient to "
     "A[G].",
     "always", c_coefficient_quotient_extension},
};

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& def : kChecks)
    if (id == def.id) return &def;
  return nullptr;
}

std::string derive_verdict(std::string_view mode, const CheckOutcome& oc,
                           std::string& note) {
  if (!oc.applicable) return "vacuous";
  if (mode == "always") return *oc.conclusion ? "confirmed" : "REFUTED";
  bool h = *oc.hypothesis;
  bool c = *oc.conclusion;
  if (mode == "equivalence") return h == c ? "confirmed" : "REFUTED";
  if (h) return c ? "confirmed" : "REFUTED";
  if (!c)
    append_note(note,
                "hypothesis fails and the conclusion fails too (contrapositive instance)");
  return "vacuous";
}

CheckReport run_check_def(const CheckDef& def, Instance& inst) {
  CheckReport rep;
  rep.id = def.id;
  rep.instance = inst.expr();
  rep.mode = def.mode;
  auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome oc = def.run(inst);
    rep.hypothesis = oc.hypothesis;
    rep.conclusion = oc.conclusion;
    rep.witness = std::move(oc.witness);
    rep.note = std::move(oc.note);
    rep.verdict = derive_verdict(def.mode, oc, rep.note);
  } catch (const CapExceeded& e) {
    rep.verdict = "undecided-cap";
    rep.note = e.what();
  }
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

CheckReport cap_report(const CheckDef& def, const std::string& expr,
                       const std::string& why) {
  CheckReport rep;
  rep.id = def.id;
  rep.instance = expr;
  rep.mode = def.mode;
  rep.verdict = "undecided-cap";
  rep.note = why;
  return rep;
}

std::vector<const CheckDef*> resolve_checks(const std::vector<std::string>& ids) {
  std::vector<const CheckDef*> defs;
  if (ids.empty()) {
    for (const CheckDef& def : kChecks) defs.push_back(&def);
    return defs;
  }
  for (const std::string& id : ids) {
    const CheckDef* def = find_check(id);
    if (!def) throw std::invalid_argument("unknown check id: " + id);
    defs.push_back(def);
  }
  return defs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(const std::string& expr, EngineLimits limits)
    : limits_(std::move(limits)) {
  RingExprPtr e = parse_ring_expr(expr);
  expr_ = print_ring_expr(*e);
  ring_ = build_ring(*e, limits_);
  ctx_ = group_ring_context(ring_);
}

const Ideal& Instance::zero() {
  if (!zero_) zero_ = zero_ideal(ring_);
  return *zero_;
}

const Ideal& Instance::aug_ideal() {
  if (!aug_) {
    if (!ctx_) throw std::logic_error("augmentation ideal requires a group ring");
    aug_ = augmentation_ideal(*ctx_, limits_);
  }
  return *aug_;
}

const PropertyReport& Instance::property(IdealProperty p) {
  auto it = props_.find(static_cast<int>(p));
  if (it != props_.end()) return it->second;
  PropertyReport rep = check_ideal_property(zero(), p, limits_);
  return props_.emplace(static_cast<int>(p), std::move(rep)).first->second;
}

// ---------------------------------------------------------------------------
// Public surface

const std::vector<TheoremCheck>& list_registry() {
  static const std::vector<TheoremCheck> listing = [] {
    std::vector<TheoremCheck> out;
    for (const CheckDef& def : kChecks)
      out.push_back({def.id, def.statement, def.mode});
    return out;
  }();
  return listing;
}

CheckReport run_check(const std::string& id, Instance& inst) {
  const CheckDef* def = find_check(id);
  if (!def) throw std::invalid_argument("unknown check id: " + id);
  return run_check_def(*def, inst);
}

CheckReport run_check(const std::string& id, const std::string& expr,
                      const EngineLimits& limits, double timeout_s) {
  const CheckDef* def = find_check(id);
  if (!def) throw std::invalid_argument("unknown check id: " + id);
  EngineLimits lm = limits;
  if (timeout_s > 0) lm.deadline = Deadline(timeout_s);
  std::string canonical = print_ring_expr(*parse_ring_expr(expr));
  try {
    Instance inst(canonical, lm);
    return run_check_def(*def, inst);
  } catch (const CapExceeded& e) {
    return cap_report(*def, canonical, e.what());
  }
}

GridRunResult run_grid(const std::vector<std::string>& check_ids,
                       const GridSpec& grid, bool keep_going) {
  std::vector<const CheckDef*> defs =
      resolve_checks(!check_ids.empty() ? check_ids : grid.checks);

  auto run_instance = [&](const std::string& expr) {
    std::vector<CheckReport> out;
    EngineLimits lm = grid.limits;
    if (grid.timeout_per_instance_s > 0)
      lm.deadline = Deadline(grid.timeout_per_instance_s);
    std::optional<Instance> inst;
    try {
      inst.emplace(expr, lm);
    } catch (const CapExceeded& e) {
      for (const CheckDef* def : defs) out.push_back(cap_report(*def, expr, e.what()));
      return out;
    }
    for (const CheckDef* def : defs) out.push_back(run_check_def(*def, *inst));
    return out;
  };

  const std::size_t n = grid.exprs.size();
  std::vector<std::vector<CheckReport>> per(n);
  std::vector<bool> done(n, false);
  unsigned jobs = std::max(1u, grid.limits.jobs);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      per[i] = run_instance(grid.exprs[i]);
      done[i] = true;
      if (!keep_going &&
          std::any_of(per[i].begin(), per[i].end(),
                      [](const CheckReport& r) { return r.verdict == "REFUTED"; }))
        break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          per[i] = run_instance(grid.exprs[i]);
      });
    }
    for (auto& t : pool) t.join();
    done.assign(n, true);
  }

  GridRunResult res;
  for (std::size_t i = 0; i < n; ++i) {
    if (!done[i]) {
      res.aborted = true;
      break;
    }
    for (CheckReport& rep : per[i]) {
      if (res.aborted) break;
      if (rep.verdict == "confirmed") ++res.confirmed;
      else if (rep.verdict == "vacuous") ++res.vacuous;
      else if (rep.verdict == "REFUTED") ++res.refuted;
      else ++res.undecided;
      bool stop = rep.verdict == "REFUTED" && !keep_going;
      res.reports.push_back(std::move(rep));
      if (stop) res.aborted = true;
    }
    if (res.aborted) break;
  }
  // a stop on the very last report is not an abort: nothing was skipped
  if (res.aborted && res.reports.size() == n * defs.size()) res.aborted = false;
  return res;
}

SearchReport search_counterexample(const std::string& target,
                                   const GridSpec& grid) {
  if (target != "question1" && target != "question2" && target != "conjecture1")
    throw std::invalid_argument("unknown search target: " + target);
  SearchReport sr;
  sr.target = target;
  std::size_t confirmed = 0, undecided = 0;
  for (const std::string& expr : grid.exprs) {
    SearchRow row;
    row.instance = expr;
    EngineLimits lm = grid.limits;
    if (grid.timeout_per_instance_s > 0)
      lm.deadline = Deadline(grid.timeout_per_instance_s);
    try {
      Instance inst(expr, lm);
      const auto& ctx = inst.group_ctx();
      if (!ctx || ctx->group->order() < 2) {
        row.status = "hypothesis-fails";
        row.note = "not a group ring over a nontrivial group";
      } else if (target == "question1") {
        auto pr = group_predicate(*ctx->group, GroupPredicate::Prime, std::nullopt, lm);
        if (!pr.value) {
          row.status = "hypothesis-fails";
          row.note = "G has a nontrivial finite normal subgroup";
          if (pr.witness_subgroup)
            row.note += " of order " + std::to_string(pr.witness_subgroup->order());
        } else if (inst.property(IdealProperty::Semiprime).holds) {
          row.status = "confirmed";
          ++confirmed;
        } else {
          row.status = "counterexample";
          sr.verdict = "counterexample";
          json w;
          w["instance"] = inst.expr();
          if (inst.property(IdealProperty::Semiprime).witness)
            w["witness"] = witness_json(
                inst.ring(), *inst.property(IdealProperty::Semiprime).witness);
          sr.witness = w;
        }
      } else if (target == "question2") {
        bool hyp = ring_is(ctx->coeff, IdealProperty::Nilary, lm);
        std::string why = hyp ? "" : "coefficient ring is not nilary";
        if (hyp) {
          for (const Subgroup& h : normal_subgroups(*ctx->group, lm)) {
            if (h.is_trivial()) continue;
            if (!int_nilpotent(ctx->coeff, h.order())) {
              hyp = false;
              why = "normal subgroup order " + std::to_string(h.order()) +
                    " is not nilpotent in the coefficient ring";
              break;
            }
          }
        }
        if (!hyp) {
          row.status = "hypothesis-fails";
          row.note = why;
        } else if (inst.property(IdealProperty::Nilary).holds) {
          row.status = "confirmed";
          ++confirmed;
        } else {
          row.status = "counterexample";
          sr.verdict = "counterexample";
          json w;
          w["instance"] = inst.expr();
          if (inst.property(IdealProperty::Nilary).witness)
            w["witness"] = witness_json(inst.ring(),
                                        *inst.property(IdealProperty::Nilary).witness);
          sr.witness = w;
        }
      } else {  // conjecture1
        const auto* z = std::get_if<ZmodProv>(&ctx->coeff->provenance());
        bool hyp = z && is_prime(z->modulus);
        std::string why = hyp ? "" : "coefficient ring is not a prime field";
        if (hyp) {
          for (const Subgroup& h : normal_subgroups(*ctx->group, lm)) {
            if (h.is_trivial()) continue;
            if (h.order() % z->modulus != 0) {
              hyp = false;
              why = "normal subgroup order " + std::to_string(h.order()) +
                    " is not divisible by p = " + std::to_string(z->modulus);
              break;
            }
          }
        }
        if (!hyp) {
          row.status = "hypothesis-fails";
          row.note = why;
        } else if (inst.property(IdealProperty::PNilary).holds) {
          row.status = "confirmed";
          ++confirmed;
        } else {
          row.status = "counterexample";
          sr.verdict = "counterexample";
          json w;
          w["instance"] = inst.expr();
          if (inst.property(IdealProperty::PNilary).witness)
            w["witness"] = witness_json(inst.ring(),
                                        *inst.property(IdealProperty::PNilary).witness);
          sr.witness = w;
        }
      }
    } catch (const CapExceeded& e) {
      row.status = "undecided-cap";
      row.note = e.what();
      ++undecided;
    }
    sr.rows.push_back(std::move(row));
    if (sr.verdict == "counterexample") break;
  }
  if (sr.verdict.empty()) {
    if (undecided > 0) {
      sr.verdict = "undecided-cap";
      sr.note = "no counterexample among decided instances; " +
                std::to_string(undecided) + " instances exceeded caps";
    } else if (confirmed > 0) {
      sr.verdict = "confirmed";
      sr.note = "no counterexample in the searched grid; " +
                std::to_string(confirmed) + " hypothesis-satisfying instances confirmed";
    } else {
      sr.verdict = "vacuous";
      sr.note = target == "question1"
                    ? "no nontrivial finite group is prime, so the hypothesis "
                      "holds on no instance"
                    : "hypothesis holds on no instance of the grid";
    }
  }
  return sr;
}

// ---------------------------------------------------------------------------
// JSON emitters

json check_report_json(const CheckReport& r, bool with_timings) {
  json j;
  j["id"] = r.id;
  j["instance"] = r.instance;
  j["mode"] = r.mode;
  j["verdict"] = r.verdict;
  j["hypothesis"] = r.hypothesis ? json(*r.hypothesis) : json(nullptr);
  j["conclusion"] = r.conclusion ? json(*r.conclusion) : json(nullptr);
  j["witness"] = r.witness;
  j["note"] = r.note;
  if (with_timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

json search_report_json(const SearchReport& r) {
  json j;
  j["target"] = r.target;
  j["verdict"] = r.verdict;
  j["note"] = r.note;
  j["witness"] = r.witness;
  json rows = json::array();
  for (const SearchRow& row : r.rows) {
    json rj;
    rj["instance"] = row.instance;
    rj["status"] = row.status;
    rj["note"] = row.note;
    rows.push_back(rj);
  }
  j["instances"] = rows;
  return j;
}

json property_report_json(const RingPtr& ring, const PropertyReport& rep,
                          bool with_timings, double runtime_ms) {
  json j;
  j["property"] = property_name(rep.property);
  j["holds"] = rep.holds;
  j["ideal_is_whole"] = rep.ideal_is_whole;
  j["regime"] = rep.regime;
  j["pairs_checked"] = rep.pairs_checked;
  j["note"] = rep.note;
  j["witness"] = rep.witness ? witness_json(ring, *rep.witness) : json(nullptr);
  if (with_timings) j["runtime_ms"] = runtime_ms;
  return j;
}

}  // namespace gring
