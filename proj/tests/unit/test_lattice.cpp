#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/oracle.hpp"
#include "dlat/poset.hpp"
#include "dlat/type_a.hpp"
#include "dlat/verify.hpp"

using namespace dlat;

namespace {

ColoredLattice chain(std::vector<int> colors) {
  std::vector<std::string> names{"0"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    names.push_back(std::to_string(i + 1));
    edges.push_back({i, i + 1, colors[i]});
  }
  return ColoredLattice::from_edges(names, edges);
}

// 0 < a, b < 1
ColoredLattice diamond(int a_lo, int b_lo, int a_hi, int b_hi) {
  return ColoredLattice::from_edges({"0", "a", "b", "1"},
                                    {{0, 1, a_lo}, {0, 2, b_lo}, {1, 3, a_hi}, {2, 3, b_hi}});
}

// 0 < a < b < 1 and 0 < c < 1
ColoredLattice pentagon() {
  return ColoredLattice::from_edges({"0", "a", "b", "c", "1"},
                                    {{0, 1, 1}, {1, 2, 2}, {2, 4, 3}, {0, 3, 1}, {3, 4, 2}});
}

ColoredLattice m3() {
  return ColoredLattice::from_edges({"0", "a", "b", "c", "1"},
                                    {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
}

std::size_t at(const ColoredLattice& L, const char* name) { return L.index_of(name); }

PathRecord path(const ColoredLattice& L, std::vector<const char*> names) {
  std::vector<std::size_t> vs;
  for (auto n : names) vs.push_back(L.index_of(n));
  return make_path(L, vs);
}

}  // namespace

TEST(Lattice, RejectsBadEdges) {
  EXPECT_THROW(ColoredLattice::from_edges({"a", "a"}, {}), InvalidInput);
  EXPECT_THROW(ColoredLattice::from_edges({"a", "b"}, {{0, 1, 1}, {1, 0, 1}}), InvalidInput);
  EXPECT_THROW(ColoredLattice::from_edges({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}), InvalidInput);
  EXPECT_THROW(ColoredLattice::from_edges({"a"}, {{0, 5, 1}}), InvalidInput);
}

TEST(Lattice, DiamondColoring) {
  EXPECT_TRUE(is_diamond_colored(chain({1, 2, 3})));
  EXPECT_TRUE(is_diamond_colored(diamond(1, 2, 2, 1)));
  EXPECT_FALSE(is_diamond_colored(diamond(1, 2, 3, 1)));
  EXPECT_TRUE(is_diamond_colored(build_l_a(BoxSpec::make(2, 6))));
}

TEST(Lattice, TopographicBalance) {
  std::vector<ColoredLattice> two{chain({1}), chain({2})};
  EXPECT_TRUE(is_topographically_balanced(product(two)));
  EXPECT_TRUE(is_topographically_balanced(build_l_a(BoxSpec::make(2, 5))));
  EXPECT_FALSE(is_topographically_balanced(pentagon()));
}

TEST(Lattice, RankFunction) {
  auto r = rank_function(chain({1, 1, 1, 1}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (std::vector<int>{0, 1, 2, 3, 4}));
  auto L = build_l_a(BoxSpec::make(2, 6));
  auto rl = rank_function(L);
  ASSERT_TRUE(rl);
  EXPECT_EQ((*rl)[at(L, "3,3")], 6);
  // the pentagon's cover graph is a 5-cycle
  EXPECT_FALSE(rank_function(pentagon()));
  EXPECT_THROW(rank_function(ColoredLattice::from_edges({"a", "b"}, {})), InvalidInput);
}

TEST(Lattice, MeetAndJoin) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  for (std::size_t x = 0; x < L.size(); ++x) {
    EXPECT_EQ(meet(L, x, max_element(L)), x);
    EXPECT_EQ(join(L, x, min_element(L)), x);
  }
  EXPECT_EQ(L.name(meet(L, at(L, "3,1"), at(L, "2,2"))), "2,1");
  EXPECT_EQ(L.name(join(L, at(L, "3,1"), at(L, "2,2"))), "3,2");

  auto P = build_p_a(BoxSpec::make(2, 6));
  auto J = ideal_lattice(P);
  for (std::size_t x = 0; x < J.elements.size(); ++x)
    for (std::size_t y = 0; y < J.elements.size(); ++y) {
      OrderIdeal u;
      std::set_union(J.elements[x].members.begin(), J.elements[x].members.end(), J.elements[y].members.begin(),
                     J.elements[y].members.end(), std::back_inserter(u.members));
      EXPECT_EQ(join(J.lattice, x, y), J.index_of(u));
    }
  EXPECT_FALSE(is_lattice(ColoredLattice::from_edges({"a", "b", "c", "d"}, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}})));
  EXPECT_THROW(meet(ColoredLattice::from_edges({"a", "b"}, {}), 0, 1), NotALattice);
}

TEST(Lattice, ModularAndDistributive) {
  EXPECT_TRUE(is_modular(m3()));
  EXPECT_FALSE(is_distributive(m3()));
  EXPECT_FALSE(is_modular(pentagon()));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto L = j_lattice(oracle::random_poset(rng, 7, 3));
    EXPECT_TRUE(is_distributive(L));
    EXPECT_TRUE(is_modular(L));
  }
}

TEST(Lattice, RankIdentity) {
  auto L = build_d_a(BoxSpec::make(3, 7));
  auto r = rank_function(L);
  ASSERT_TRUE(r);
  EXPECT_TRUE(rank_identity_holds(L, *r));
}

TEST(Lattice, MeetIrreduciblePartner) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  auto mi = meet_irreducible_elements(L);
  std::set<std::size_t> image;
  for (auto j : join_irreducible_elements(L)) {
    auto m = meet_irreducible_partner(L, j);
    EXPECT_TRUE(std::find(mi.begin(), mi.end(), m) != mi.end());
    EXPECT_FALSE(L.leq(j, m));
    image.insert(m);
  }
  EXPECT_EQ(image.size(), mi.size());
}

TEST(Lattice, DualAndRename) {
  auto L = build_l_a(BoxSpec::make(2, 5));
  auto DD = dual(dual(L));
  EXPECT_EQ(DD.edges(), L.edges());
  EXPECT_EQ(dual(L).name(max_element(dual(L))), L.name(min_element(L)));
  EXPECT_THROW(rename(L, {"x"}), InvalidInput);
}

TEST(Lattice, ProductOfChains) {
  std::vector<ColoredLattice> two{chain({1}), chain({2})};
  auto D = product(two);
  EXPECT_EQ(D.size(), 4u);
  EXPECT_TRUE(is_diamond_colored(D));
  EXPECT_EQ(D.name(3), "(1,1)");

  auto spec = BoxSpec::make(2, 6);
  auto T = build_l_tilde(spec);
  auto r = rank_function(T);
  ASSERT_TRUE(r);
  EXPECT_EQ((*r)[max_element(T)], 8);
  std::vector<std::size_t> sizes{5, 5};
  for (std::size_t v = 0; v < T.size(); ++v) {
    auto c = product_coords(sizes, v);
    EXPECT_EQ((*r)[v], static_cast<int>(c[0] + c[1]));
    EXPECT_EQ(product_index(sizes, c), v);
  }
}

TEST(Lattice, FullLengthSublattices) {
  auto spec = BoxSpec::make(2, 6);
  auto T = build_l_tilde(spec);
  std::vector<std::size_t> all(T.size());
  for (std::size_t v = 0; v < T.size(); ++v) all[v] = v;
  EXPECT_TRUE(check_full_length_sublattice(T, all));
  auto K = l_tab_members(spec);
  EXPECT_TRUE(check_full_length_sublattice(T, K));
  auto no_top = K;
  no_top.erase(std::find(no_top.begin(), no_top.end(), max_element(T)));
  EXPECT_FALSE(check_full_length_sublattice(T, no_top));

  auto tab = build_l_tab(spec);
  auto r = rank_function(tab);
  ASSERT_TRUE(r);
  EXPECT_EQ((*r)[max_element(tab)], 8);
  EXPECT_EQ(verify::structure(tab), "");
}

TEST(Lattice, FullLengthWitness) {
  auto spec = BoxSpec::make(2, 6);
  auto T = build_l_tilde(spec);
  auto K = l_tab_members(spec);
  auto tab = build_l_tab(spec);
  std::set<std::string> image;
  for (auto x : join_irreducible_elements(T)) {
    auto w = full_length_witness(T, K, x);
    EXPECT_TRUE(std::binary_search(K.begin(), K.end(), w));
    if (std::binary_search(K.begin(), K.end(), x)) EXPECT_EQ(w, x);
    image.insert(T.name(w));
  }
  // the image is exactly the join irreducibles of the sublattice, one per rank step
  std::set<std::string> jk;
  for (auto j : join_irreducible_elements(tab)) jk.insert(tab.name(j));
  EXPECT_EQ(image.size(), 8u);
  EXPECT_EQ(image, jk);
  // row 1 column 1 of the tableau lattice is the element (1,0) itself; row 2 column 1 needs (1,1)
  EXPECT_EQ(T.name(full_length_witness(T, K, T.index_of("(0,1)"))), "(1,1)");
}

TEST(Lattice, PathStatsBasics) {
  PathRecord empty{{0}, {}};
  auto st = path_stats(empty);
  EXPECT_EQ(st.length, 0u);
  EXPECT_TRUE(st.ascents.empty());
  EXPECT_TRUE(st.descents.empty());

  auto L = build_l_a(BoxSpec::make(2, 6));
  auto p = path(L, {"1,1", "2,1", "3,1", "3,0"});
  auto s = path_stats(p);
  EXPECT_EQ(s.length, 3u);
  EXPECT_EQ(s.ascents, (std::map<int, int>{{2, 1}, {3, 1}}));
  EXPECT_EQ(s.descents, (std::map<int, int>{{5, 1}}));
  EXPECT_THROW(path(L, {"1,1", "3,1"}), InvalidInput);
}

TEST(Lattice, MountainOfMountainIsItself) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  auto p = path(L, {"1,1", "2,1", "3,1", "3,0"});
  EXPECT_TRUE(is_mountain(p));
  EXPECT_EQ(mountainize(L, p), p);
}

TEST(Lattice, ValleyInSquareBecomesMountain) {
  std::vector<ColoredLattice> two{chain({1}), chain({2})};
  auto G = product(two);
  auto p = path(G, {"(1,0)", "(0,0)", "(0,1)"});
  EXPECT_TRUE(is_valley(p));
  auto m = mountainize(G, p);
  EXPECT_EQ(m.length(), 2u);
  EXPECT_TRUE(is_mountain(m));
  EXPECT_EQ(G.name(m.vertices[1]), "(1,1)");
  EXPECT_EQ(path_stats(m), path_stats(p));
  auto v = valleyize(G, m);
  EXPECT_EQ(v, p);
}

TEST(Lattice, MountainizeKeepsStatsWhenDefined) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  std::mt19937_64 rng(4);
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    // random monotone-free walk: alternate random up/down runs without repeats
    std::vector<std::size_t> vs{std::uniform_int_distribution<std::size_t>(0, L.size() - 1)(rng)};
    std::set<std::size_t> seen{vs[0]};
    for (int s = 0; s < 6; ++s) {
      std::vector<std::size_t> nb;
      for (const auto& e : L.up(vs.back())) if (!seen.count(e.vertex)) nb.push_back(e.vertex);
      for (const auto& e : L.down(vs.back())) if (!seen.count(e.vertex)) nb.push_back(e.vertex);
      if (nb.empty()) break;
      vs.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
      seen.insert(vs.back());
    }
    auto p = make_path(L, vs);
    try {
      auto m = mountainize(L, p);
      EXPECT_TRUE(is_mountain(m));
      EXPECT_EQ(path_stats(m), path_stats(p));
      ++done;
    } catch (const DegeneratePath&) {
    }
  }
  EXPECT_GT(done, 0);
}

// The least-j rewriting can produce x_{j-1} == x_{j+1}. On this simple path no
// mountain path of the same length and ascent colors exists at all.
TEST(Lattice, MountainizeDegenerateCase) {
  auto L = build_l_a(BoxSpec::make(2, 6));
  auto p = path(L, {"4,3", "3,3", "3,2", "4,2", "4,1", "4,0", "3,0"});
  ASSERT_TRUE(is_simple(p));
  EXPECT_THROW(mountainize(L, p), DegeneratePath);

  // brute force: every path from 4,3 of length 6 that is a mountain ending at 3,0
  auto want = path_stats(p);
  const auto s = L.index_of("4,3"), t = L.index_of("3,0");
  int matches = 0;
  std::vector<std::size_t> cur{s};
  auto rec = [&](auto&& self, bool descending) -> void {
    if (cur.size() == 7) {
      if (cur.back() == t && path_stats(make_path(L, cur)) == want) ++matches;
      return;
    }
    if (!descending)
      for (const auto& e : L.up(cur.back())) {
        cur.push_back(e.vertex);
        self(self, false);
        cur.pop_back();
      }
    for (const auto& e : L.down(cur.back())) {
      cur.push_back(e.vertex);
      self(self, true);
      cur.pop_back();
    }
  };
  rec(rec, false);
  EXPECT_EQ(matches, 0);

  std::vector<ColoredLattice> two{chain({1}), chain({2})};
  auto G = product(two);
  EXPECT_THROW(mountainize(G, path(G, {"(1,0)", "(0,0)", "(0,1)", "(1,1)"})), DegeneratePath);
  EXPECT_THROW(mountainize(G, make_path(G, {0, 1, 0})), InvalidInput);
}

TEST(Lattice, ShortestPathsHaveJoinApex) {
  auto L = build_d_a(BoxSpec::make(2, 6));
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t t = 0; t < L.size(); ++t)
      for (const auto& p : oracle::enumerate_shortest_paths(L, s, t)) {
        auto m = mountainize(L, p);
        auto v = valleyize(L, p);
        std::size_t i = 0;
        while (i < m.steps.size() && m.steps[i].dir == Direction::up) ++i;
        EXPECT_EQ(m.vertices[i], join(L, s, t));
        i = 0;
        while (i < v.steps.size() && v.steps[i].dir == Direction::down) ++i;
        EXPECT_EQ(v.vertices[i], meet(L, s, t));
      }
}
