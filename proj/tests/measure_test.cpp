#include <gtest/gtest.h>

#include "profin/errors.hpp"
#include "profin/lattice.hpp"
#include "profin/measure.hpp"
#include "profin/small_groups.hpp"
#include "support/oracles.hpp"

using namespace profin;

namespace {

std::vector<GroupPtr> sample_groups() {
  std::vector<GroupPtr> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(groups::cyclic(n));
  out.push_back(groups::klein_four());
  out.push_back(groups::symmetric(3));
  out.push_back(groups::quaternion());
  out.push_back(groups::dihedral(4));
  out.push_back(groups::dihedral(6));
  out.push_back(groups::elementary_abelian(2, 3));
  out.push_back(groups::alternating(4));
  out.push_back(groups::symmetric(4));
  out.push_back(groups::alternating(5));
  out.push_back(groups::heisenberg(3));
  out.push_back(groups::extraspecial_cyclic(3));
  return out;
}

std::set<oracle::ElemSet> oracle_normals(const GroupPtr& g) {
  auto subs = g->order() <= 12 ? oracle::all_subgroups_by_subsets(g) : oracle::two_generated_subgroups(g);
  return oracle::normal_subgroups(g, subs);
}

std::uint64_t oracle_neumann_min(const GroupPtr& g) {
  const auto normals = oracle_normals(g);
  std::uint64_t best = UINT64_MAX;
  for (const auto& n : normals) {
    const auto nn = oracle::commutator(g, n, n);
    for (const auto& k : normals) {
      if (!std::includes(n.begin(), n.end(), k.begin(), k.end())) continue;
      if (!std::includes(k.begin(), k.end(), nn.begin(), nn.end())) continue;
      const std::uint64_t index = g->order() / n.size();
      best = std::min<std::uint64_t>(best, k.size() * index * index);
    }
  }
  return best;
}

}  // namespace

TEST(CommutingPairs, Examples) {
  EXPECT_EQ(commuting_pairs(groups::cyclic(4)).pairs, 16);
  EXPECT_EQ(commuting_pairs(groups::klein_four()).pairs, 16);
  auto s3 = commuting_pairs(groups::symmetric(3));
  EXPECT_EQ(s3.pairs, 18);
  EXPECT_EQ(s3.class_count, 3u);
  EXPECT_EQ(s3.fraction, Rational(1, 2));
  EXPECT_EQ(commuting_pairs(groups::quaternion()).pairs, 40);
  EXPECT_EQ(commuting_pairs(groups::cyclic(1)).fraction, Rational(1));
  auto a5 = commuting_pairs(groups::alternating(5));
  EXPECT_EQ(a5.pairs, 300);
  EXPECT_EQ(a5.fraction, Rational(1, 12));
}

TEST(CommutingPairs, MatchesDoubleLoopOracle) {
  for (const auto& g : sample_groups()) {
    auto stats = commuting_pairs(g);
    EXPECT_EQ(stats.pairs, oracle::commuting_pairs(g)) << g->name();
    EXPECT_EQ(stats.class_count, oracle::classes(g).size()) << g->name();
    EXPECT_EQ(stats.fraction, Rational(stats.pairs, BigInt(g->order()) * g->order()));
  }
}

TEST(CommutingPairs, Cap) {
  Caps caps = default_caps();
  caps.order = 50;
  EXPECT_THROW(commuting_pairs(groups::alternating(5), caps), CapExceeded);
}

TEST(Neumann, Examples) {
  auto ab = neumann_search(groups::cyclic(6));
  EXPECT_EQ(ab.value, 1);
  EXPECT_TRUE(ab.k.is_trivial());
  EXPECT_TRUE(ab.n.is_whole());
  EXPECT_EQ(ab.pairs, 36);
  EXPECT_TRUE(ab.bound_holds);

  auto s3 = neumann_search(groups::symmetric(3));
  EXPECT_EQ(s3.value, 3);
  EXPECT_EQ(s3.k_size, 3u);
  EXPECT_TRUE(s3.n.is_whole());
  EXPECT_EQ(s3.pairs, 18);
  EXPECT_TRUE(s3.bound_holds);
}

TEST(Neumann, A5TakesWholeGroupForBothSubgroups) {
  // Among (1, 1) with value 3600 and (A5, A5) with value 60 the latter is smaller.
  auto a5 = neumann_search(groups::alternating(5));
  EXPECT_EQ(a5.value, 60);
  EXPECT_TRUE(a5.k.is_whole());
  EXPECT_TRUE(a5.n.is_whole());
  EXPECT_EQ(a5.n_index, 1u);
  EXPECT_EQ(a5.n_commutator, 60u);
  EXPECT_TRUE(a5.bound_holds);
}

TEST(Neumann, MinimalAgainstExhaustiveOracle) {
  for (const auto& g : sample_groups()) {
    auto w = neumann_search(g);
    EXPECT_EQ(w.value, oracle_neumann_min(g)) << g->name();
    EXPECT_TRUE(is_normal(w.k));
    EXPECT_TRUE(is_normal(w.n));
    EXPECT_TRUE(w.k.is_subset_of(w.n));
    EXPECT_TRUE(commutator_subgroup(w.n, w.n).is_subset_of(w.k));
    EXPECT_TRUE(w.bound_holds);
    EXPECT_GE(w.pairs * w.value, BigInt(g->order()) * g->order());
  }
}

TEST(CoreQuotientRank, Examples) {
  EXPECT_EQ(core_quotient_rank(groups::symmetric(3)), 1u);
  EXPECT_EQ(core_quotient_rank(groups::cyclic(12)), 0u);
  EXPECT_EQ(core_quotient_rank(groups::quaternion()), 0u);  // every subgroup is normal
  EXPECT_EQ(core_quotient_rank(groups::dihedral(4)), 1u);
  EXPECT_EQ(core_quotient_rank(groups::symmetric(4)), 2u);
}

TEST(RhoTable, Com) {
  auto t = rho_table({groups::cyclic(4), groups::klein_four()}, RhoKind::com);
  ASSERT_EQ(t.entries.size(), 4u);
  EXPECT_FALSE(t.entries[0].value.has_value());
  EXPECT_FALSE(t.entries[2].value.has_value());
  EXPECT_EQ(*t.entries[3].value, 16);
  EXPECT_EQ(t.entries[3].groups.size(), 2u);
  EXPECT_EQ(t.mode, "quotients");

  auto t6 = rho_table({groups::symmetric(3), groups::cyclic(6)}, RhoKind::com, 6, "subgroups");
  EXPECT_EQ(*t6.entries[5].value, 18);
  EXPECT_EQ(t6.mode, "subgroups");
}

TEST(RhoTable, ComEqualsSquareExactlyOnAbelianOrders) {
  auto corpus = sample_groups();
  auto t = rho_table(corpus, RhoKind::com);
  for (const auto& e : t.entries) {
    if (!e.value) continue;
    bool all_abelian = true;
    for (const auto& g : corpus) {
      if (g->order() == e.order) all_abelian = all_abelian && g->is_abelian();
    }
    EXPECT_LE(*e.value, BigInt(e.order) * e.order);
    EXPECT_EQ(*e.value == BigInt(e.order) * e.order, all_abelian) << e.order;
  }
}

TEST(RhoTable, RankAndWedge) {
  auto r = rho_table({groups::symmetric(3)}, RhoKind::r);
  EXPECT_EQ(*r.entries[5].value, 1);

  auto w = rho_table({groups::heisenberg(3), groups::extraspecial_cyclic(3), groups::cyclic(27)}, RhoKind::wedge);
  ASSERT_EQ(w.entries.size(), 27u);
  EXPECT_EQ(*w.entries[26].value, 0);
  EXPECT_EQ(w.entries[26].groups.size(), 2u);
  EXPECT_EQ(parse_rho_kind("wedge"), RhoKind::wedge);
  EXPECT_EQ(to_string(RhoKind::r), "r");
  EXPECT_THROW(parse_rho_kind("size"), InvalidInput);
}

TEST(RhoWedge, Heisenberg27) {
  auto rep = rho_wedge(groups::heisenberg(3));
  EXPECT_EQ(rep.p, 3u);
  EXPECT_EQ(rep.dim_u, 2u);
  EXPECT_EQ(rep.dim_wedge, 1u);
  EXPECT_EQ(rep.dim_w, 1u);
  EXPECT_EQ(rep.rank_f, 1u);
  EXPECT_EQ(rep.dim_kernel, 0u);
  EXPECT_EQ(rep.k, 0u);
  EXPECT_EQ(rep.w_elements.size(), 3u);
}

TEST(RhoWedge, ElementaryAbelian) {
  auto rep = rho_wedge(groups::elementary_abelian(2, 3));
  EXPECT_EQ(rep.dim_u, 3u);
  EXPECT_EQ(rep.dim_wedge, 3u);
  EXPECT_EQ(rep.rank_f, 0u);
  EXPECT_EQ(rep.dim_kernel, 3u);
  EXPECT_EQ(rep.k, 1u);

  auto trivial = rho_wedge(groups::cyclic(1));
  EXPECT_EQ(trivial.dim_u, 0u);
  EXPECT_FALSE(trivial.k.has_value());
}

TEST(RhoWedge, Rejections) {
  EXPECT_THROW(rho_wedge(groups::cyclic(4)), PreconditionFailed);
  EXPECT_THROW(rho_wedge(groups::symmetric(3)), PreconditionFailed);
  EXPECT_THROW(rho_wedge(groups::dihedral(8)), PreconditionFailed);  // class 3
  EXPECT_FALSE(wedge_applicable(groups::cyclic(4)));
  EXPECT_TRUE(wedge_applicable(groups::quaternion()));
}

TEST(RhoWedge, InvariantUnderRelabelling) {
  for (auto g : {groups::heisenberg(3), groups::extraspecial_cyclic(3), groups::quaternion(), groups::dihedral(4),
                 groups::elementary_abelian(3, 3)}) {
    auto base = rho_wedge(g);
    EXPECT_EQ(base.dim_wedge, base.dim_u * (base.dim_u - 1) / 2);
    for (std::uint32_t seed = 1; seed <= 4; ++seed) {
      auto copy = FiniteGroup::from_table(g->name() + "'", oracle::relabelled_table(g, seed));
      auto rep = rho_wedge(copy);
      EXPECT_EQ(rep.dim_u, base.dim_u);
      EXPECT_EQ(rep.dim_w, base.dim_w);
      EXPECT_EQ(rep.rank_f, base.rank_f);
      EXPECT_EQ(rep.k, base.k);
    }
  }
}

TEST(RhoWedge, ImageSpansCommutators) {
  // f_L is onto the span of commutators, which is W itself here.
  for (auto g : {groups::heisenberg(3), groups::quaternion(), groups::dihedral(4), groups::heisenberg(2)}) {
    auto rep = rho_wedge(g);
    EXPECT_EQ(rep.rank_f, rep.dim_w) << g->name();
  }
}

TEST(Inequalities, SecondOnOrder27) {
  auto rep = verify_inequalities({groups::heisenberg(3)}, std::nullopt);
  ASSERT_EQ(rep.two.size(), 1u);
  const auto& row = rep.two[0];
  EXPECT_EQ(row.p, 3u);
  EXPECT_EQ(row.log_p_order, 3u);
  EXPECT_EQ(row.rho_wedge, 0u);
  EXPECT_EQ(row.exponent2, 6);
  EXPECT_EQ(row.lhs_squared, Rational(729));
  EXPECT_EQ(row.rho_com, 297);
  EXPECT_EQ(row.intermediate, Rational(243));
  EXPECT_TRUE(row.lhs_below_intermediate);
  EXPECT_TRUE(row.intermediate_holds);
  EXPECT_TRUE(row.holds);
  EXPECT_TRUE(rep.all_hold);
  EXPECT_TRUE(rep.one.empty());
}

TEST(Inequalities, SecondOnOrder8) {
  auto rep = verify_inequalities({groups::dihedral(4), groups::quaternion()}, std::nullopt);
  ASSERT_EQ(rep.two.size(), 1u);
  EXPECT_EQ(rep.two[0].rho_wedge, 0u);
  EXPECT_EQ(rep.two[0].rho_com, 40);
  EXPECT_EQ(rep.two[0].lhs_squared, Rational(64));
  EXPECT_EQ(rep.two[0].intermediate, Rational(32));
  EXPECT_TRUE(rep.all_hold);
}

TEST(Inequalities, AbelianIntermediateIsEquality) {
  auto rep = verify_inequalities({groups::klein_four(), groups::elementary_abelian(3, 2)}, std::nullopt);
  ASSERT_EQ(rep.two.size(), 2u);
  for (const auto& row : rep.two) {
    EXPECT_EQ(row.intermediate, Rational(row.rho_com));
    EXPECT_TRUE(row.holds);
  }
}

TEST(Inequalities, SkipsOrdersOutsideHypotheses) {
  auto rep = verify_inequalities({groups::cyclic(1), groups::cyclic(8), groups::quaternion()}, std::nullopt);
  EXPECT_TRUE(rep.two.empty());
  ASSERT_EQ(rep.two_skipped.size(), 2u);
  EXPECT_EQ(rep.two_skipped[0].first, 1u);
  EXPECT_EQ(rep.two_skipped[1].first, 8u);
}

TEST(Inequalities, FirstWithSuppliedBeta) {
  std::map<std::size_t, BigInt> beta{{1, 2}, {2, 6}};
  auto rep = verify_inequalities({groups::symmetric(3)}, beta);
  ASSERT_EQ(rep.one.size(), 1u);
  EXPECT_EQ(rep.one[0].rho_r, 1u);
  EXPECT_EQ(rep.one[0].beta, 2);
  EXPECT_EQ(rep.one[0].lhs, Rational(9));
  EXPECT_EQ(rep.one[0].rho_com, 18);
  EXPECT_TRUE(rep.one[0].holds);

  std::map<std::size_t, BigInt> missing{{2, 6}};
  EXPECT_THROW(verify_inequalities({groups::symmetric(3)}, missing), InvalidInput);
  std::map<std::size_t, BigInt> zero{{1, 0}};
  EXPECT_THROW(verify_inequalities({groups::symmetric(3)}, zero), InvalidInput);
}

TEST(Epsilon, AbelianFamily) {
  auto rep = epsilon_evidence({groups::cyclic(2), groups::cyclic(4), groups::klein_four()});
  EXPECT_EQ(rep.epsilon, Rational(1));
  for (const auto& m : rep.members) {
    EXPECT_EQ(m.n1, 1u);
    EXPECT_EQ(m.n2, 1u);
  }
  EXPECT_FALSE(rep.fraction_decay);
  EXPECT_FALSE(rep.witness_growth);
}

TEST(Epsilon, PowersOfA5Decay) {
  auto a5 = groups::alternating(5);
  auto rep = epsilon_evidence({a5, direct_power(a5, 2)});
  ASSERT_EQ(rep.members.size(), 2u);
  EXPECT_EQ(rep.members[0].fraction, Rational(1, 12));
  EXPECT_EQ(rep.members[1].fraction, Rational(1, 144));
  EXPECT_EQ(rep.epsilon, Rational(1, 144));
  EXPECT_TRUE(rep.fraction_decay);
  EXPECT_TRUE(rep.witness_growth);
}

TEST(Epsilon, BoundedFamily) {
  auto s3 = groups::symmetric(3);
  auto rep = epsilon_evidence({s3, direct_product("S3xZ2", {s3, groups::cyclic(2)})});
  EXPECT_EQ(rep.epsilon, Rational(1, 2));
  EXPECT_FALSE(rep.fraction_decay);
  for (const auto& m : rep.members) {
    EXPECT_EQ(m.n1, 1u);
    EXPECT_EQ(m.n2, 3u);
  }
  EXPECT_THROW(epsilon_evidence({}), InvalidInput);
}

TEST(Epsilon, DirectPowersOfNonAbelianDecrease) {
  auto s3 = groups::symmetric(3);
  auto rep = epsilon_evidence({s3, direct_power(s3, 2), direct_power(s3, 3)});
  EXPECT_TRUE(rep.fraction_decay);
  EXPECT_EQ(rep.members[2].fraction, Rational(1, 8));
}
