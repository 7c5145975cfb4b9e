#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gring/group.hpp"
#include "gring/ideal.hpp"
#include "gring/ring.hpp"

namespace gring {

// Unital ring homomorphism, stored as an explicit value table and verified
// at construction: phi(1) = 1, phi(x + s) = phi(x) + phi(s) for every x and
// every additive generator s, and phi(s*t) = phi(s)*phi(t) on generator
// pairs. By induction over generator expansions this implies the full
// homomorphism laws; small sources get the exhaustive pair check instead.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<ElemId> map;
  bool surjective = false;

  ElemId operator()(ElemId x) const { return map[x]; }
};

RingHom make_ring_hom(RingPtr source, RingPtr target, std::vector<ElemId> map,
                      const EngineLimits& limits = {});

Ideal hom_kernel(const RingHom& hom, const EngineLimits& limits = {});

// R / I as a ring of least coset representatives.
RingPtr quotient_ring(const RingPtr& r, const Ideal& i,
                      const EngineLimits& limits = {});

// span{r*x : r in R} (left = true) or {x*r}; additive generators are the
// images of the ring's additive generators under y -> y*x, which stay
// spanning because the map is additive.
AdditiveSpan ring_multiples(const RingPtr& r, ElemId x, bool left);

// ---------------------------------------------------------------------------
// Group-ring structure maps

// Coefficient-sum map A[G] -> A.
RingHom augmentation(const GroupRingContext& ctx, const EngineLimits& limits = {});

// A[G] -> A[G/H] collapsing each coset to one basis element; h must be
// normal.
RingHom relative_augmentation(const GroupRingContext& ctx, const Subgroup& h,
                              const EngineLimits& limits = {});

// Kernel of the augmentation, with generators {1 - g}.
Ideal augmentation_ideal(const GroupRingContext& ctx,
                         const EngineLimits& limits = {});

// Kernel of the relative augmentation (h normal). Checked four ways before
// returning: kernel of the quotient map, closure of {1 - h}, span of
// {(1-h)g} and span of {g(1-h)} all agree.
Ideal relative_augmentation_ideal(const GroupRingContext& ctx, const Subgroup& h,
                                  const EngineLimits& limits = {});

// Right-module span of {(1-h)g : h in H, g in G} with coefficients from A.
// For normal H this is the relative augmentation ideal; for non-normal H it
// is the reading under which the left annihilator equals A[G]*Hsum exactly.
AdditiveSpan relative_augmentation_span(const GroupRingContext& ctx,
                                        const Subgroup& h);

// Hsum: the sum of the basis elements of H.
ElemId subgroup_sum(const GroupRingContext& ctx, const Subgroup& h);

// Commutes with every element (tested on multiplier generators, which
// suffices by bilinearity).
bool central_element(const RingPtr& r, ElemId x);

// ---------------------------------------------------------------------------
// Subrings and coefficient extensions

// A[H] realized standalone, with the embedding into A[G] by coefficient
// support.
struct SubringEmbedding {
  RingPtr sub;
  GroupRingContext sub_ctx;
  std::vector<ElemId> to_parent;  // sub id -> parent id
};

SubringEmbedding group_subring(const GroupRingContext& ctx, const Subgroup& h,
                               const EngineLimits& limits = {});

// J ∩ A[H] as an ideal of the standalone A[H] (J an ideal of A[G]).
Ideal restrict_ideal(const Ideal& j, const SubringEmbedding& emb,
                     const EngineLimits& limits = {});

// The ideal of A[G] generated by an ideal of the embedded A[H]; for central
// H this is just the additive span of {i * g}.
Ideal extend_subring_ideal(const GroupRingContext& ctx,
                           const SubringEmbedding& emb, const Ideal& i,
                           const EngineLimits& limits = {});

// I[G]: elements whose every coefficient lies in I (an ideal of A).
Ideal extend_coefficient_ideal(const GroupRingContext& ctx, const Ideal& i,
                               const EngineLimits& limits = {});

// The verified surjection A[G] -> (A/I)[G] reducing coefficients mod I; its
// kernel is I[G], which exhibits A[G]/I[G] ≅ (A/I)[G].
RingHom coefficient_quotient_hom(const GroupRingContext& ctx, const Ideal& i,
                                 const EngineLimits& limits = {});

}  // namespace gring
