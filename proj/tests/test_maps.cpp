#include <doctest.h>

#include <gring/dsl.hpp>
#include <gring/maps.hpp>

#include <algorithm>

using namespace gring;

namespace {

Subgroup subgroup_of_order(const GroupTable& g, std::size_t k,
                           bool require_normal = false) {
  for (const Subgroup& h : all_subgroups(g))
    if (h.order() == k && (!require_normal || h.normal)) return h;
  REQUIRE(false);
  return trivial_subgroup();
}

}  // namespace

TEST_CASE("augmentation map") {
  auto r = build_ring("Z3[C6]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());

  RingHom eps = augmentation(*ctx);
  CHECK(eps.surjective);
  CHECK(eps.target->size() == 3);
  CHECK(eps(r->one()) == eps.target->one());
  CHECK(eps(504) == 1);  // 2 + 2*x^3 has coefficient sum 4 = 1 mod 3
  CHECK(eps(ctx->group_elem(2)) == 1);

  Ideal d = augmentation_ideal(*ctx);
  CHECK(d == hom_kernel(eps));
  CHECK(d.size() == 243);  // |A[G]| / |A|
  CHECK(d.contains(r->sub(ctx->group_elem(1), r->one())));
}

TEST_CASE("relative augmentation and its kernel") {
  auto r = build_ring("Z2[C4]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());
  Subgroup h = subgroup_of_order(*ctx->group, 2);
  CHECK(h.normal);
  CHECK(h.members == std::vector<ElemId>{0, 2});

  RingHom pi = relative_augmentation(*ctx, h);
  CHECK(pi.surjective);
  CHECK(pi.target->size() == 4);  // Z2[C4/H], |C4/H| = 2

  Ideal d = relative_augmentation_ideal(*ctx, h);
  CHECK(d == hom_kernel(pi));
  CHECK(d.size() == 4);
  CHECK(r->size() / d.size() == pi.target->size());

  // four readings agree for normal H
  ElemId one_minus_h = r->sub(r->one(), ctx->group_elem(2));
  CHECK(d == ideal_closure(r, std::vector<ElemId>{one_minus_h}));
  AdditiveSpan right_span = relative_augmentation_span(*ctx, h);
  CHECK(right_span.members == d.bits());

  // degenerate subgroups
  CHECK(relative_augmentation_ideal(*ctx, trivial_subgroup()).is_zero());
  CHECK(relative_augmentation_ideal(*ctx, whole_subgroup(*ctx->group)) ==
        augmentation_ideal(*ctx));
}

TEST_CASE("annihilator of the relative augmentation span") {
  // Holds for every subgroup, normal or not: l(span{(1-h)g}) = A[G]*Hsum.
  auto r = build_ring("Z2[S3]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());
  for (const Subgroup& h : all_subgroups(*ctx->group)) {
    if (h.is_trivial()) continue;
    CAPTURE(h.order());
    AdditiveSpan span = relative_augmentation_span(*ctx, h);
    auto left = annihilator(r, span.add_gens, true);
    AdditiveSpan multiples = ring_multiples(r, subgroup_sum(*ctx, h), true);
    CHECK(left.members == multiples.members);
  }
  // S3 has non-normal subgroups, so the loop above exercised that case
  auto subs = all_subgroups(*ctx->group);
  CHECK(std::any_of(subs.begin(), subs.end(),
                    [](const Subgroup& h) { return !h.normal; }));
}

TEST_CASE("subgroup sums and centrality") {
  auto r = build_ring("Z2[C4]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());
  Subgroup h = subgroup_of_order(*ctx->group, 2);
  CHECK(subgroup_sum(*ctx, h) == 10);  // 1 + x^2

  auto s3 = build_ring("Z2[S3]");
  auto sctx = group_ring_context(s3);
  REQUIRE(sctx.has_value());
  CHECK(central_element(s3, s3->one()));
  CHECK(central_element(s3, subgroup_sum(*sctx, whole_subgroup(*sctx->group))));
  // a transposition is not central in S3
  Subgroup t = subgroup_of_order(*sctx->group, 2);
  CHECK_FALSE(t.normal);
  CHECK_FALSE(central_element(s3, sctx->group_elem(t.members[1])));
  // Hsum of a non-normal subgroup is not central either
  CHECK_FALSE(central_element(s3, subgroup_sum(*sctx, t)));
}

TEST_CASE("ring multiples") {
  auto z4 = build_ring("Z4");
  AdditiveSpan m = ring_multiples(z4, 2, true);
  CHECK(m.members.count() == 2);
  CHECK(m.members.test(0));
  CHECK(m.members.test(2));
}

TEST_CASE("quotient by an ideal through maps") {
  auto z4 = build_ring("Z4");
  auto q = quotient_ring(z4, principal_ideal(z4, 2));
  CHECK(q->size() == 2);
  CHECK(q->characteristic() == 2);
  CHECK(validate_ring_axioms(*q).pass);
}

TEST_CASE("group subring embedding, restriction and extension") {
  auto r = build_ring("Z2[C4]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());
  Subgroup h = subgroup_of_order(*ctx->group, 2);

  SubringEmbedding emb = group_subring(*ctx, h);
  CHECK(emb.sub->size() == 4);  // Z2[C2]
  // embedding is a ring map onto the support-in-H subring
  for (ElemId a = 0; a < 4; ++a)
    for (ElemId b = 0; b < 4; ++b) {
      CHECK(emb.to_parent[emb.sub->add(a, b)] ==
            r->add(emb.to_parent[a], emb.to_parent[b]));
      CHECK(emb.to_parent[emb.sub->mul(a, b)] ==
            r->mul(emb.to_parent[a], emb.to_parent[b]));
    }
  CHECK(emb.to_parent[emb.sub->one()] == r->one());

  Ideal sub_aug = augmentation_ideal(emb.sub_ctx);
  CHECK(sub_aug.size() == 2);

  Ideal extended = extend_subring_ideal(*ctx, emb, sub_aug);
  CHECK(extended == relative_augmentation_ideal(*ctx, h));

  Ideal back = restrict_ideal(extended, emb);
  CHECK(back == sub_aug);
}

TEST_CASE("coefficient extension and quotient") {
  auto r = build_ring("Z4[C2]");
  auto ctx = group_ring_context(r);
  REQUIRE(ctx.has_value());
  Ideal two = principal_ideal(ctx->coeff, 2);

  Ideal ig = extend_coefficient_ideal(*ctx, two);
  CHECK(ig.size() == 4);  // |I|^|G| = 2^2
  for (ElemId x : ig.members())
    for (ElemId g = 0; g < 2; ++g)
      CHECK(two.contains(ctx->coeff_of(x, g)));

  RingHom red = coefficient_quotient_hom(*ctx, two);
  CHECK(red.surjective);
  CHECK(red.target->size() == 4);  // (Z4/<2>)[C2] = Z2[C2]
  CHECK(hom_kernel(red) == ig);
  CHECK(red.source->size() == red.target->size() * ig.size());
}

TEST_CASE("make_ring_hom validates the laws") {
  auto z4 = build_ring("Z4");
  auto z2 = build_ring("Z2");

  RingHom mod2 = make_ring_hom(z4, z2, {0, 1, 0, 1});
  CHECK(mod2.surjective);
  CHECK(hom_kernel(mod2).members() == std::vector<ElemId>{0, 2});

  // x -> 2x does not send 1 to 1
  CHECK_THROWS_AS(make_ring_hom(z4, z4, {0, 2, 0, 2}), std::invalid_argument);
  // x -> x^2 is not additive on Z4
  CHECK_THROWS_AS(make_ring_hom(z4, z4, {0, 1, 0, 1}), std::invalid_argument);
}
