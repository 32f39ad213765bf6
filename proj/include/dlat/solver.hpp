#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"
#include "dlat/type_a.hpp"

namespace dlat {

// Finite multiset of colors. Zero multiplicities are never stored.
class ColorMultiset {
public:
  ColorMultiset() = default;
  explicit ColorMultiset(const std::map<int, int>& counts);
  // coefficient i-1 is the multiplicity of color i
  static ColorMultiset from_coefficients(const std::vector<int>& c);

  int count(int color) const;
  int size() const;
  bool empty() const { return counts_.empty(); }
  const std::map<int, int>& counts() const { return counts_; }
  void add(int color, int times = 1);
  std::string str() const;  // "{3,4,4,5}"

  friend bool operator==(const ColorMultiset&, const ColorMultiset&) = default;

private:
  std::map<int, int> counts_;
};

ColorMultiset multiset_union(const ColorMultiset& a, const ColorMultiset& b);         // entrywise max
ColorMultiset multiset_intersection(const ColorMultiset& a, const ColorMultiset& b);  // entrywise min
ColorMultiset multiset_difference(const ColorMultiset& a, const ColorMultiset& b);    // truncated
ColorMultiset multiset_sum(const ColorMultiset& a, const ColorMultiset& b);

ColorMultiset color_census(const VertexColoredPoset& P, const std::vector<std::size_t>& vertices);

enum class Via { join, meet };

struct GameSolution {
  int distance = 0;
  ColorMultiset per_color;
  PathRecord path;
  std::size_t waypoint = 0;
};

// L must be ideal_lattice(P); s and t are vertex indices of L.lattice.
GameSolution solve_distributive(const VertexColoredPoset& P, const SubsetLattice& L, std::size_t s,
                                std::size_t t, Via via = Via::join);

struct DominoSolution {
  int distance = 0;
  ColorMultiset per_color;
  ColorMultiset from_moves;  // S: moves from the minimum to the start
  ColorMultiset to_moves;    // T: moves from the minimum to the target
  std::vector<Partition> shapes;
  std::vector<Step> steps;
  Partition waypoint;
};

DominoSolution solve_domino(const BoxSpec& spec, const Partition& from, const Partition& to, Via via = Via::join);

}  // namespace dlat
