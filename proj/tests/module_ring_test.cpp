#include <gtest/gtest.h>

#include <set>

#include "profin/errors.hpp"
#include "profin/module_ring.hpp"
#include "profin/small_groups.hpp"

using namespace profin;

namespace {

using gfp::Matrix;
using gfp::Vec;

std::shared_ptr<const GModuleAction> share(GModuleAction a) {
  return std::make_shared<const GModuleAction>(std::move(a));
}

ElementId involution(const GroupPtr& g) {
  for (ElementId x = 1; x < g->order(); ++x) {
    if (g->element_order(x) == 2) return x;
  }
  return 0;
}

GModuleAction swap_action(std::uint32_t p) {
  auto z2 = groups::cyclic(2);
  return GModuleAction::from_partial(z2, p, 2, {{involution(z2), Matrix{{0, 1}, {1, 0}}}});
}

GModuleAction trivial_action(const GroupPtr& g, std::uint32_t p, std::size_t dim) {
  return GModuleAction::create(g, p, dim, std::vector<Matrix>(g->order(), gfp::identity(dim)));
}

// Right regular module: e_x * h = e_{xh}.
GModuleAction regular_action(const GroupPtr& g, std::uint32_t p) {
  const auto n = g->order();
  std::vector<Matrix> m(n, Matrix(n, Vec(n, 0)));
  for (ElementId h = 0; h < n; ++h) {
    for (ElementId x = 0; x < n; ++x) m[h][x][g->mul(x, h)] = 1;
  }
  return GModuleAction::create(g, p, n, std::move(m));
}

// Permutation module of a permutation group: e_i * h = e_{h(i)}.
GModuleAction permutation_action(const GroupPtr& g, std::uint32_t p) {
  const auto& perm = *g->perm_presentation();
  std::vector<Matrix> m(g->order(), Matrix(perm.degree, Vec(perm.degree, 0)));
  for (ElementId h = 0; h < g->order(); ++h) {
    for (std::uint32_t i = 0; i < perm.degree; ++i) m[h][i][perm.elements[h](i)] = 1;
  }
  return GModuleAction::create(g, p, perm.degree, std::move(m));
}

Vec unit(std::size_t dim, std::size_t k) {
  Vec v(dim, 0);
  v[k] = 1;
  return v;
}

}  // namespace

TEST(Gfp, RankKernelSolve) {
  Matrix m{{1, 2}, {2, 4}};
  EXPECT_EQ(gfp::rank(m, 5), 1u);
  auto k = gfp::left_kernel(m, 5);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(gfp::apply(k[0], m, 5), (Vec{0, 0}));
  EXPECT_FALSE(gfp::is_invertible(m, 5));
  EXPECT_TRUE(gfp::is_invertible(Matrix{{0, 1}, {1, 0}}, 2));
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(a * gfp::inverse(a, 7) % 7, 1u);
  auto c = gfp::solve_combination(Matrix{{1, 0, 1}, {0, 1, 1}}, Vec{2, 1, 0}, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Vec{2, 1}));
  EXPECT_FALSE(gfp::solve_combination(Matrix{{1, 0, 1}}, Vec{0, 1, 0}, 3).has_value());
}

TEST(Action, Validation) {
  auto z2 = groups::cyclic(2);
  const auto s = involution(z2);
  EXPECT_THROW(GModuleAction::from_partial(z2, 4, 2, {{s, Matrix{{0, 1}, {1, 0}}}}), InvalidInput);
  // Order 3 matrix cannot represent an involution.
  EXPECT_THROW(GModuleAction::from_partial(z2, 2, 2, {{s, Matrix{{0, 1}, {1, 1}}}}), InvalidInput);
  std::vector<Matrix> singular(2, gfp::identity(2));
  singular[s] = Matrix{{1, 1}, {1, 1}};
  EXPECT_THROW(GModuleAction::create(z2, 3, 2, singular), InvalidInput);
  Caps small = default_caps();
  small.algebra_order = 8;
  EXPECT_THROW(GModuleAction::create(z2, 3, 2, std::vector<Matrix>(2, gfp::identity(2)), small), CapExceeded);
}

TEST(Action, EncodeDecodeAndHomomorphism) {
  auto a = permutation_action(groups::symmetric(3), 5);
  EXPECT_EQ(a.space_size(), 125u);
  for (RingElem x = 0; x < a.space_size(); ++x) {
    ASSERT_EQ(a.encode(a.decode(x)), x);
    for (ElementId g = 0; g < 6; ++g) {
      for (ElementId h = 0; h < 6; ++h) {
        ASSERT_EQ(a.act_id(a.act_id(x, g), h), a.act_id(x, a.group()->mul(g, h)));
      }
    }
  }
}

TEST(OrbitSpan, Examples) {
  auto swap = swap_action(3);
  auto span = orbit_span_check(swap, {1, 0});
  EXPECT_TRUE(span.spans);
  ASSERT_EQ(span.basis.size(), 2u);
  EXPECT_EQ(swap.act({1, 0}, span.basis[0]), (Vec{1, 0}));
  EXPECT_EQ(swap.act({1, 0}, span.basis[1]), (Vec{0, 1}));
  EXPECT_FALSE(orbit_span_check(swap, {0, 0}).spans);
  EXPECT_FALSE(orbit_span_check(swap, {1, 1}).spans);

  auto trivial = trivial_action(groups::cyclic(3), 2, 2);
  for (RingElem x = 0; x < 4; ++x) EXPECT_FALSE(orbit_span_check(trivial, trivial.decode(x)).spans);
}

TEST(TranslateDecomposition, Examples) {
  auto swap = swap_action(3);
  const auto s = involution(swap.group());
  EXPECT_TRUE(translate_decomposition(swap, {1, 0}, {0, 0}).terms.empty());
  EXPECT_EQ(translate_decomposition(swap, {1, 0}, {0, 1}).terms, (std::vector<ElementId>{s}));
  EXPECT_EQ(translate_decomposition(swap, {1, 0}, {1, 1}).terms, (std::vector<ElementId>{0, s}));
  // (2, 2) needs four translates over GF(3).
  EXPECT_EQ(translate_decomposition(swap, {1, 0}, {2, 2}).bound, 4u);
  EXPECT_THROW(translate_decomposition(swap, {1, 1}, {1, 0}), PreconditionFailed);
}

TEST(TranslateDecomposition, SumsReproduceTarget) {
  auto a = permutation_action(groups::symmetric(3), 3);
  const Vec v{1, 0, 0};
  for (RingElem x = 0; x < a.space_size(); ++x) {
    auto d = translate_decomposition(a, v, a.decode(x));
    RingElem sum = 0;
    for (auto h : d.terms) sum = a.add(sum, a.encode(a.act(v, h)));
    ASSERT_EQ(sum, x);
    ASSERT_LE(d.terms.size(), d.bound);
  }
}

TEST(RingConstruct, TrivialActionGivesPrimeField) {
  auto a = share(trivial_action(groups::cyclic(3), 5, 1));
  auto rc = ring_construct(a, {1});
  ASSERT_TRUE(rc.well_defined());
  EXPECT_EQ(rc.annihilator_dim, 2u);
  auto alg = rc.ring->to_algebra();
  EXPECT_TRUE(alg.is_field());
  EXPECT_EQ(alg.size(), 5u);
  EXPECT_EQ(rc.ring->one(), 1u);
}

TEST(RingConstruct, SwapActionSplitsIntoTwoPrimeFields) {
  auto a = share(swap_action(3));
  auto rc = ring_construct(a, {1, 0});
  ASSERT_TRUE(rc.well_defined());
  EXPECT_EQ(rc.annihilator_dim, 0u);
  const auto& ring = *rc.ring;
  EXPECT_TRUE(ring.is_commutative());
  EXPECT_TRUE(ring.is_associative());
  EXPECT_TRUE(nilpotent_free_check(ring).nilpotent_free);
  // v^e * v^s = v^s and v^s * v^s = v^e.
  EXPECT_EQ(ring.mul(1, 3), 3u);
  EXPECT_EQ(ring.mul(3, 3), 1u);
  auto d = mr_decompose(ring.to_algebra("GF3[Z2]"));
  ASSERT_EQ(d.factors.size(), 2u);
  for (const auto& f : d.factors) EXPECT_EQ(f.field.size(), 3u);
}

TEST(RingConstruct, RegularActionInCharacteristicTwoHasNilpotent) {
  auto a = share(swap_action(2));
  auto rc = ring_construct(a, {1, 0});
  ASSERT_TRUE(rc.well_defined());
  const auto& ring = *rc.ring;
  // e + s has id 3 and squares to zero.
  EXPECT_EQ(ring.mul(3, 3), 0u);
  auto check = nilpotent_free_check(ring);
  EXPECT_FALSE(check.nilpotent_free);
  EXPECT_EQ(check.witness, 3u);
  try {
    mr_decompose(ring.to_algebra());
    FAIL() << "expected a nilpotent";
  } catch (const NilpotentElementFound& e) {
    EXPECT_EQ(e.witness(), 3u);
  }
}

TEST(RingConstruct, SemisimpleWhenCharacteristicCoprime) {
  // GF(2)[Z3] = GF(2) x GF(4).
  auto a = share(regular_action(groups::cyclic(3), 2));
  auto rc = ring_construct(a, unit(3, 0));
  ASSERT_TRUE(rc.well_defined());
  auto d = mr_decompose(rc.ring->to_algebra());
  ASSERT_EQ(d.factors.size(), 2u);
  std::multiset<std::size_t> sizes{d.factors[0].field.size(), d.factors[1].field.size()};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4}));

  auto mod3 = share(regular_action(groups::cyclic(3), 3));
  auto bad = ring_construct(mod3, unit(3, 0));
  ASSERT_TRUE(bad.well_defined());
  EXPECT_FALSE(nilpotent_free_check(*bad.ring).nilpotent_free);
}

TEST(RingConstruct, IllDefinedWitnessForPermutationModule) {
  auto a = share(permutation_action(groups::symmetric(3), 5));
  auto rc = ring_construct(a, unit(3, 0));
  EXPECT_FALSE(rc.well_defined());
  EXPECT_EQ(rc.annihilator_dim, 3u);
  ASSERT_TRUE(rc.witness.has_value());
  const auto& w = *rc.witness;
  const auto& g = a->group();
  // The annihilator element really kills v, but its left translate does not.
  Vec kill(3, 0), moved(3, 0);
  for (ElementId x = 0; x < 6; ++x) {
    auto t = a->act(unit(3, 0), x);
    auto u = a->act(unit(3, 0), g->mul(w.left, x));
    for (std::size_t i = 0; i < 3; ++i) {
      kill[i] = (kill[i] + w.annihilator_element[x] * t[i]) % 5;
      moved[i] = (moved[i] + w.annihilator_element[x] * u[i]) % 5;
    }
  }
  EXPECT_EQ(kill, (Vec{0, 0, 0}));
  EXPECT_EQ(moved, w.product);
  EXPECT_NE(moved, (Vec{0, 0, 0}));
}

TEST(RingConstruct, SpanFailure) {
  auto a = share(trivial_action(groups::cyclic(2), 3, 2));
  EXPECT_THROW(ring_construct(a, {1, 0}), PreconditionFailed);
}

TEST(RingConstruct, NonAbelianRegularRingIsAssociativeNotCommutative) {
  auto a = share(regular_action(groups::symmetric(3), 2));
  auto rc = ring_construct(a, unit(6, 0));
  ASSERT_TRUE(rc.well_defined());
  EXPECT_TRUE(rc.ring->is_associative());
  EXPECT_FALSE(rc.ring->is_commutative());
  EXPECT_THROW(rc.ring->to_algebra(), PreconditionFailed);
  EXPECT_TRUE(decomposition_agreement(*rc.ring).agrees);
}

TEST(RingConstruct, TranslateProductsFollowTheGroup) {
  std::vector<std::shared_ptr<const GModuleAction>> actions{
      share(swap_action(3)), share(swap_action(2)), share(regular_action(groups::cyclic(3), 2)),
      share(regular_action(groups::klein_four(), 3)), share(regular_action(groups::symmetric(3), 2))};
  for (const auto& a : actions) {
    auto v = unit(a->dim(), 0);
    auto rc = ring_construct(a, v);
    ASSERT_TRUE(rc.well_defined());
    const auto& g = a->group();
    for (ElementId h = 0; h < g->order(); ++h) {
      for (ElementId k = 0; k < g->order(); ++k) {
        ASSERT_EQ(rc.ring->mul(a->encode(a->act(v, h)), a->encode(a->act(v, k))),
                  a->encode(a->act(v, g->mul(h, k))));
      }
    }
  }
}

TEST(RingConstruct, AbelianActionsAreAlwaysWellDefinedAndCommutative) {
  std::vector<std::shared_ptr<const GModuleAction>> actions{
      share(swap_action(3)), share(swap_action(5)), share(trivial_action(groups::cyclic(4), 7, 1)),
      share(regular_action(groups::cyclic(4), 3)), share(regular_action(groups::klein_four(), 3)),
      share(regular_action(groups::cyclic(5), 2))};
  // Z3 on GF(2)^2 through the companion matrix of x^2 + x + 1.
  auto z3 = groups::cyclic(3);
  ElementId gen = 1;
  while (z3->element_order(gen) != 3) ++gen;
  actions.push_back(share(GModuleAction::from_partial(z3, 2, 2, {{gen, Matrix{{0, 1}, {1, 1}}}})));
  for (const auto& a : actions) {
    for (RingElem x = 1; x < a->space_size(); ++x) {
      auto v = a->decode(x);
      if (!orbit_span_check(*a, v).spans) continue;
      auto rc = ring_construct(a, v);
      ASSERT_TRUE(rc.well_defined());
      ASSERT_TRUE(rc.ring->is_commutative());
      ASSERT_TRUE(rc.ring->is_associative());
      const bool coprime = a->group()->order() % a->p() != 0;
      if (coprime) EXPECT_NO_THROW(mr_decompose(rc.ring->to_algebra()));
    }
  }
}

TEST(Agreement, DecompositionFormulaMatchesTable) {
  auto swap = share(swap_action(3));
  auto rc = ring_construct(swap, {1, 0});
  auto rep = decomposition_agreement(*rc.ring);
  EXPECT_TRUE(rep.agrees);
  EXPECT_EQ(rep.checked, 81u);

  auto big = share(regular_action(groups::cyclic(7), 3));
  auto rcb = ring_construct(big, unit(7, 0));
  auto sampled = decomposition_agreement(*rcb.ring, 300, 42);
  EXPECT_TRUE(sampled.agrees);
  EXPECT_EQ(sampled.checked, 300u);
}

TEST(Faithfulness, Examples) {
  auto trivial = trivial_action(groups::cyclic(3), 2, 2);
  auto rt = faithfulness_report(trivial);
  EXPECT_EQ(rt.kernel.size(), 3u);
  EXPECT_FALSE(rt.has_regular_orbit);

  auto swap = swap_action(3);
  auto rs = faithfulness_report(swap);
  EXPECT_EQ(rs.kernel, (std::vector<ElementId>{0}));
  EXPECT_EQ(rs.stabilizer_index[swap.encode({1, 0})], 2u);
  EXPECT_TRUE(rs.has_regular_orbit);

  auto z2 = groups::cyclic(2);
  auto neg = GModuleAction::from_partial(z2, 3, 2, {{involution(z2), Matrix{{2, 0}, {0, 2}}}});
  auto rn = faithfulness_report(neg);
  EXPECT_EQ(rn.kernel, (std::vector<ElementId>{0}));
  EXPECT_EQ(rn.stabilizer_index[0], 1u);
  for (RingElem x = 1; x < 9; ++x) EXPECT_EQ(rn.stabilizer_index[x], 2u);
}
