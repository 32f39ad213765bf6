#include <gtest/gtest.h>

#include <random>

#include "dlat/error.hpp"
#include "dlat/oracle.hpp"
#include "dlat/poset.hpp"
#include "dlat/serialize.hpp"
#include "dlat/type_a.hpp"
#include "dlat/verify.hpp"

using namespace dlat;

namespace {

VertexColoredPoset chain(std::vector<int> colors) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    ids.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return VertexColoredPoset::create(ids, colors, covers);
}

VertexColoredPoset antichain(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
  return VertexColoredPoset::create(ids, std::vector<int>(n, 1), {});
}

std::vector<int> colors_up_chain(const ColoredLattice& L) {
  std::vector<int> out;
  auto v = min_element(L);
  while (!L.up(v).empty()) {
    out.push_back(L.up(v)[0].color);
    v = L.up(v)[0].vertex;
  }
  return out;
}

}  // namespace

TEST(Poset, RejectsBadInput) {
  EXPECT_THROW(VertexColoredPoset::create({"a", "a"}, {1, 1}, {}), InvalidInput);
  EXPECT_THROW(VertexColoredPoset::create({"a", "b"}, {1, 0}, {}), InvalidInput);
  EXPECT_THROW(VertexColoredPoset::create({"a", "b"}, {1, 1}, {{0, 1}, {1, 0}}), InvalidInput);
  // a<b<c plus the non-cover a<c
  EXPECT_THROW(VertexColoredPoset::create({"a", "b", "c"}, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}), InvalidInput);
  EXPECT_THROW(VertexColoredPoset::create({"a"}, {1}, {{0, 3}}), InvalidInput);
}

TEST(Poset, OrderIdealCounts) {
  EXPECT_EQ(enumerate_order_ideals(chain({1, 2, 3})).size(), 4u);
  EXPECT_EQ(enumerate_order_ideals(antichain(2)).size(), 4u);
  EXPECT_EQ(enumerate_order_ideals(build_p_a(BoxSpec::make(2, 6))).size(), 15u);
  EXPECT_EQ(enumerate_order_ideals(VertexColoredPoset()).size(), 1u);
}

TEST(Poset, IdealsAndFiltersAreClosed) {
  auto P = build_p_a(BoxSpec::make(3, 6));
  for (const auto& x : enumerate_order_ideals(P)) {
    EXPECT_TRUE(is_order_ideal(P, x));
    EXPECT_TRUE(is_order_filter(P, complement(P, x)));
  }
  EXPECT_FALSE(is_order_ideal(P, OrderIdeal{{p_a_index(BoxSpec::make(3, 6), 2, 2)}}));
}

TEST(Poset, JLatticeOfSingleVertex) {
  auto L = j_lattice(chain({1}));
  ASSERT_EQ(L.size(), 2u);
  ASSERT_EQ(L.edges().size(), 1u);
  EXPECT_EQ(L.edges()[0].color, 1);
}

TEST(Poset, JLatticeOfBoxPoset) {
  auto L = j_lattice(build_p_a(BoxSpec::make(2, 5)));
  EXPECT_EQ(L.size(), 10u);
  EXPECT_EQ(L.edges().size(), 12u);
  EXPECT_TRUE(is_distributive(L));
}

TEST(Poset, DisjointSumGivesProduct) {
  auto P = chain({1, 2});
  auto Q = antichain(2);
  auto S = disjoint_sum(P, Q);
  EXPECT_EQ(S.id(0), "1:c0");
  EXPECT_EQ(S.id(2), "2:a0");
  EXPECT_EQ(j_lattice(S).size(), j_lattice(P).size() * j_lattice(Q).size());
  EXPECT_EQ(m_lattice(S).size(), m_lattice(P).size() * m_lattice(Q).size());
  std::map<int, int> sigma{{1, 2}, {2, 1}};
  EXPECT_EQ(verify::operation_identities(P, Q, sigma), "");
}

TEST(Poset, MLatticeOfSingleVertex) {
  auto L = m_lattice(chain({1}));
  ASSERT_EQ(L.size(), 2u);
  EXPECT_EQ(L.edges()[0].color, 1);
}

TEST(Poset, MLatticeOfTwoChainReadsColorsUp) {
  // bottom filter is all of P; removing the color-1 minimum is the lowest edge
  EXPECT_EQ(colors_up_chain(m_lattice(chain({1, 2}))), (std::vector<int>{1, 2}));
  EXPECT_EQ(colors_up_chain(j_lattice(chain({1, 2}))), (std::vector<int>{1, 2}));
}

TEST(Poset, MLatticeMatchesJLatticeOnChains) {
  for (std::vector<int> cs : {std::vector<int>{1}, {2, 1}, {1, 3, 2}, {4, 2, 3, 1}}) {
    auto P = chain(cs);
    auto J = ideal_lattice(P);
    auto M = filter_lattice(P);
    std::vector<std::size_t> f;
    for (const auto& x : J.elements) f.push_back(M.index_of(complement(P, x)));
    EXPECT_TRUE(oracle::check_constructed_iso(J.lattice, M.lattice, f));
  }
}

TEST(Poset, IrreduciblesOfSmallLattices) {
  auto two = j_lattice(chain({5}));
  auto J = join_irreducibles(two);
  ASSERT_EQ(J.size(), 1u);
  EXPECT_EQ(J.color(0), 5);
  EXPECT_EQ(meet_irreducibles(two).size(), 1u);

  EXPECT_EQ(join_irreducibles(build_l_a(BoxSpec::make(2, 6))).size(), 8u);
  EXPECT_EQ(meet_irreducibles(build_l_a(BoxSpec::make(2, 5))).size(), 6u);
  EXPECT_EQ(verify::poset_round_trips(build_p_a(BoxSpec::make(2, 6))), "");
}

TEST(Poset, RoundTripsOnRandomPosets) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto P = oracle::random_poset(rng, 8, 3);
    EXPECT_EQ(verify::poset_round_trips(P), "") << i;
    EXPECT_EQ(verify::ideal_round_trip(j_lattice(P)), "") << i;
    EXPECT_EQ(verify::filter_round_trip(m_lattice(P)), "") << i;
  }
}

TEST(Poset, OperationIdentitiesOnRandomPairs) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> col(1, 3);
  for (int i = 0; i < 30; ++i) {
    auto P = oracle::random_poset(rng, 6, 3);
    auto Q = oracle::random_poset(rng, 6, 3);
    std::map<int, int> sigma{{1, col(rng)}, {2, col(rng)}, {3, col(rng)}};
    EXPECT_EQ(verify::operation_identities(P, Q, sigma), "") << i;
  }
}

TEST(Poset, DualIsAnInvolution) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    auto P = oracle::random_poset(rng, 7, 3);
    auto DD = dual(dual(P));
    ASSERT_EQ(DD.size(), P.size());
    for (std::size_t v = 0; v < P.size(); ++v) {
      EXPECT_EQ(DD.id(v), P.id(v));
      EXPECT_EQ(DD.color(v), P.color(v));
    }
    EXPECT_EQ(DD.covers(), P.covers());
  }
}

TEST(Poset, CanonicalIsoEndpoints) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  EXPECT_TRUE(canonical_iso_to_ideals(L, min_element(L)).members.empty());
  EXPECT_EQ(canonical_iso_to_ideals(L, max_element(L)).members.size(), join_irreducible_elements(L).size());
  EXPECT_TRUE(canonical_iso_to_filters(L, max_element(L)).members.empty());
  EXPECT_EQ(verify::ideal_round_trip(L), "");
  EXPECT_EQ(verify::filter_round_trip(L), "");
}

TEST(Poset, RecolorRequiresTotalMap) {
  EXPECT_THROW(recolor(chain({1, 2}), {{1, 3}}), InvalidInput);
  EXPECT_EQ(recolor(chain({1, 2}), {{1, 3}, {2, 3}}).color(1), 3);
}

TEST(Poset, JsonRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto P = oracle::random_poset(rng, 6, 4);
    auto j = poset_to_json(P);
    EXPECT_EQ(poset_to_json(poset_from_json(j)).dump(), j.dump());
  }
  EXPECT_THROW(poset_from_json(nlohmann::json::parse(R"({"vertices":[{"id":"a"}],"covers":[]})")), InvalidInput);
}
