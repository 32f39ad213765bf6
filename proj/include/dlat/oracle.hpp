#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"

// Brute-force ground truth. Everything here works from the raw edge lists only and
// deliberately avoids the closure/meet/join machinery in lattice.cpp.
namespace dlat::oracle {

struct DistanceTable {
  std::size_t n = 0;
  std::vector<int> d;  // -1 = unreachable (directed mode only)
  int operator()(std::size_t a, std::size_t b) const { return d[a * n + b]; }
};

// Undirected mode rejects disconnected input.
DistanceTable bfs_all_pairs(const ColoredLattice& G, bool undirected = true);

inline constexpr std::size_t default_path_cap = 100000;

// All shortest undirected paths from s to t. Throws CapExceeded past `cap` paths.
std::vector<PathRecord> enumerate_shortest_paths(const ColoredLattice& G, std::size_t s, std::size_t t,
                                                 std::size_t cap = default_path_cap);

// f[v] is the image of G's vertex v in H.
bool check_constructed_iso(const ColoredLattice& G, const ColoredLattice& H, const std::vector<std::size_t>& f);
bool check_poset_iso(const VertexColoredPoset& P, const VertexColoredPoset& Q, const std::vector<std::size_t>& f);

struct LatticeLawReport {
  bool lattice = false;
  bool modular = false;
  bool distributive = false;
  bool rank_identity = false;
};

LatticeLawReport check_lattice_laws(const ColoredLattice& L);

// Random DAG on up to max_vertices vertices, reduced to its covers, colors 1..max_color.
VertexColoredPoset random_poset(std::mt19937_64& rng, std::size_t max_vertices, int max_color);

}  // namespace dlat::oracle
