#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dlat {

using Bits = boost::dynamic_bitset<>;

struct Edge {
  std::size_t from;
  std::size_t to;
  int color;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  std::size_t vertex;
  int color;
};

// Edge-colored cover graph. Edges point "up". Vertices are indices 0..size()-1 with
// a display name each. Immutable; copies share storage.
class ColoredLattice {
public:
  ColoredLattice();

  // Throws InvalidInput on duplicate names, dangling indices, cycles, or edges that
  // are not covers of the generated order.
  static ColoredLattice from_edges(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t size() const;
  const std::string& name(std::size_t v) const;
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  const std::vector<Edge>& edges() const;
  const std::vector<Neighbor>& up(std::size_t v) const;
  const std::vector<Neighbor>& down(std::size_t v) const;
  std::optional<int> edge_color(std::size_t from, std::size_t to) const;

  bool leq(std::size_t x, std::size_t y) const;
  const Bits& below(std::size_t x) const;  // {z : z <= x}
  const Bits& above(std::size_t x) const;  // {z : z >= x}

  // Meet/join tables, built on first use. Empty optional when not a lattice.
  struct Tables {
    std::vector<std::size_t> meet;
    std::vector<std::size_t> join;
  };
  const std::optional<Tables>& tables() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

bool is_lattice(const ColoredLattice& L);
std::size_t meet(const ColoredLattice& L, std::size_t x, std::size_t y);
std::size_t join(const ColoredLattice& L, std::size_t x, std::size_t y);
std::size_t min_element(const ColoredLattice& L);
std::size_t max_element(const ColoredLattice& L);

bool is_diamond_colored(const ColoredLattice& L);
bool is_topographically_balanced(const ColoredLattice& L);
bool is_modular(const ColoredLattice& L);
bool is_distributive(const ColoredLattice& L);

// Unique rank with rank(min) = 0; nullopt if the cover graph admits none.
std::optional<std::vector<int>> rank_function(const ColoredLattice& L);
// 2r(s v t) - r(s) - r(t) == r(s) + r(t) - 2r(s ^ t) for all pairs.
bool rank_identity_holds(const ColoredLattice& L, const std::vector<int>& rank);

std::vector<std::size_t> join_irreducible_elements(const ColoredLattice& L);
std::vector<std::size_t> meet_irreducible_elements(const ColoredLattice& L);
// For join irreducible j of a distributive lattice: the largest element not above j.
std::size_t meet_irreducible_partner(const ColoredLattice& L, std::size_t j);

ColoredLattice dual(const ColoredLattice& L);
ColoredLattice recolor(const ColoredLattice& L, const std::map<int, int>& sigma);
ColoredLattice rename(const ColoredLattice& L, std::vector<std::string> names);

// Factor coordinates are row-major: the last factor varies fastest.
ColoredLattice product(std::span<const ColoredLattice> factors);
std::size_t product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords);
std::vector<std::size_t> product_coords(std::span<const std::size_t> sizes, std::size_t index);

// Paths

enum class Direction { up, down };

struct Step {
  int color;
  Direction dir;
  friend bool operator==(const Step&, const Step&) = default;
};

struct PathRecord {
  std::vector<std::size_t> vertices;
  std::vector<Step> steps;
  std::size_t length() const { return steps.size(); }
  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

PathRecord make_path(const ColoredLattice& L, std::vector<std::size_t> vertices);
bool is_simple(const PathRecord& p);
bool is_mountain(const PathRecord& p);
bool is_valley(const PathRecord& p);
PathRecord mountainize(const ColoredLattice& L, const PathRecord& p);
PathRecord valleyize(const ColoredLattice& L, const PathRecord& p);

struct PathStats {
  std::size_t length = 0;
  std::map<int, int> ascents;
  std::map<int, int> descents;
  friend bool operator==(const PathStats&, const PathStats&) = default;
};
PathStats path_stats(const PathRecord& p);

// Full-length sublattices. K is a set of vertex indices of L.
bool check_full_length_sublattice(const ColoredLattice& L, std::span<const std::size_t> K);
// Lattice on K with the induced order; every induced cover must be an L edge.
ColoredLattice induced_sublattice(const ColoredLattice& L, std::span<const std::size_t> K);
std::size_t full_length_witness(const ColoredLattice& L, std::span<const std::size_t> K,
                                std::size_t x);

}  // namespace dlat
