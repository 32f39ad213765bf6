#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/isomorphism.hpp"
#include "dlat/oracle.hpp"
#include "dlat/solver.hpp"

using namespace dlat;

namespace {

const BoxSpec s26 = BoxSpec::make(2, 6);

ColoredLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) edges.push_back({std::size_t(i - 1), std::size_t(i), 1});
  }
  return ColoredLattice::from_edges(names, edges);
}

}  // namespace

TEST(Oracle, Bfs) {
  auto C = chain(6);
  auto d = oracle::bfs_all_pairs(C);
  EXPECT_EQ(d(0, 5), 5);
  auto up = oracle::bfs_all_pairs(C, false);
  EXPECT_EQ(up(5, 0), -1);
  EXPECT_EQ(up(0, 5), 5);

  auto D = build_d_a(s26);
  auto dd = oracle::bfs_all_pairs(D);
  EXPECT_EQ(dd(D.index_of("4,4"), D.index_of("1,1")), 3);
  EXPECT_THROW(oracle::bfs_all_pairs(ColoredLattice::from_edges({"a", "b"}, {})), InvalidInput);
}

TEST(Oracle, BfsMatchesRankFormula) {
  auto L = build_l_a(s26);
  auto d = oracle::bfs_all_pairs(L);
  auto r = *rank_function(L);
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t t = 0; t < L.size(); ++t) {
      EXPECT_EQ(d(s, t), 2 * r[join(L, s, t)] - r[s] - r[t]);
      EXPECT_EQ(d(s, t), r[s] + r[t] - 2 * r[meet(L, s, t)]);
    }
}

TEST(Oracle, ShortestPaths) {
  auto C = chain(3);
  auto one = oracle::enumerate_shortest_paths(C, 0, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].length(), 1u);

  auto sq = ColoredLattice::from_edges({"0", "a", "b", "1"}, {{0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 1}});
  EXPECT_EQ(oracle::enumerate_shortest_paths(sq, 0, 3).size(), 2u);

  auto D = build_d_a(s26);
  auto paths = oracle::enumerate_shortest_paths(D, D.index_of("4,4"), D.index_of("1,1"));
  ASSERT_FALSE(paths.empty());
  for (const auto& p : paths) {
    ColorMultiset m;
    for (const auto& s : p.steps) m.add(s.color);
    EXPECT_EQ(m.str(), "{2,4,5}");
  }
  EXPECT_THROW(oracle::enumerate_shortest_paths(D, D.index_of("2,1"), D.index_of("1,0"), 1), CapExceeded);
}

TEST(Oracle, ShortestPathsShareStats) {
  std::mt19937_64 rng(12);
  auto D = build_d_a(BoxSpec::make(3, 7));
  std::uniform_int_distribution<std::size_t> pick(0, D.size() - 1);
  for (int i = 0; i < 20; ++i) {
    auto s = pick(rng), t = pick(rng);
    auto paths = oracle::enumerate_shortest_paths(D, s, t);
    std::set<std::pair<std::map<int, int>, std::map<int, int>>> seen;
    for (const auto& p : paths) {
      auto st = path_stats(p);
      seen.emplace(st.ascents, st.descents);
    }
    EXPECT_EQ(seen.size(), 1u);
  }
}

TEST(Oracle, ConstructedIso) {
  auto L = build_l_a(BoxSpec::make(2, 5));
  std::vector<std::size_t> id(L.size());
  for (std::size_t v = 0; v < L.size(); ++v) id[v] = v;
  EXPECT_TRUE(oracle::check_constructed_iso(L, L, id));
  auto collapse = id;
  collapse[1] = collapse[0];
  EXPECT_FALSE(oracle::check_constructed_iso(L, L, collapse));

  auto spec = BoxSpec::make(2, 5);
  auto D = build_d_a(spec);
  std::vector<std::size_t> f;
  for (std::size_t v = 0; v < L.size(); ++v) f.push_back(D.index_of(format(phi(spec, parse_partition(spec, L.name(v))))));
  EXPECT_TRUE(oracle::check_constructed_iso(L, D, f));
  // the identity on names is not a colored isomorphism
  std::vector<std::size_t> g;
  for (std::size_t v = 0; v < L.size(); ++v) g.push_back(D.index_of(L.name(v)));
  EXPECT_FALSE(oracle::check_constructed_iso(L, D, g));
}

TEST(Oracle, LatticeLaws) {
  auto rep = oracle::check_lattice_laws(build_l_a(s26));
  EXPECT_TRUE(rep.lattice && rep.modular && rep.distributive && rep.rank_identity);
  auto pent = ColoredLattice::from_edges({"0", "a", "b", "c", "1"},
                                         {{0, 1, 1}, {1, 2, 2}, {2, 4, 3}, {0, 3, 1}, {3, 4, 2}});
  auto p = oracle::check_lattice_laws(pent);
  EXPECT_TRUE(p.lattice);
  EXPECT_FALSE(p.modular);
  EXPECT_FALSE(p.distributive);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto L = j_lattice(oracle::random_poset(rng, 7, 3));
    auto r = oracle::check_lattice_laws(L);
    EXPECT_TRUE(r.lattice && r.distributive && r.modular && r.rank_identity);
    EXPECT_EQ(r.distributive, is_distributive(L));
  }
}

TEST(Oracle, RandomPosetsAreValid) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    auto P = oracle::random_poset(rng, 8, 3);
    EXPECT_LE(P.size(), 8u);
    for (std::size_t v = 0; v < P.size(); ++v) {
      EXPECT_GE(P.color(v), 1);
      EXPECT_LE(P.color(v), 3);
    }
  }
}
