#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlat/lattice.hpp"

namespace dlat {

// Finite poset given by its cover relation, with a positive color per vertex.
class VertexColoredPoset {
public:
  VertexColoredPoset();

  // covers are (lower, upper) index pairs. Throws InvalidInput on duplicate ids,
  // nonpositive colors, cycles, or pairs that are not covers of their closure.
  static VertexColoredPoset create(std::vector<std::string> ids, std::vector<int> colors,
                                   std::vector<std::pair<std::size_t, std::size_t>> covers);
  static VertexColoredPoset create_by_id(
      const std::vector<std::pair<std::string, int>>& vertices,
      const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const;
  const std::string& id(std::size_t v) const;
  int color(std::size_t v) const;
  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const;
  const std::vector<std::size_t>& lower_covers(std::size_t v) const;
  const std::vector<std::size_t>& upper_covers(std::size_t v) const;
  bool leq(std::size_t x, std::size_t y) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Sorted vertex indices of the host poset.
struct OrderIdeal {
  std::vector<std::size_t> members;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
  friend auto operator<=>(const OrderIdeal&, const OrderIdeal&) = default;
};

bool is_order_ideal(const VertexColoredPoset& P, const OrderIdeal& x);
bool is_order_filter(const VertexColoredPoset& P, const OrderIdeal& x);
OrderIdeal complement(const VertexColoredPoset& P, const OrderIdeal& x);
// "{a,b,c}" with ids in sorted order
std::string subset_name(const VertexColoredPoset& P, const OrderIdeal& x);

// Ordered lexicographically by the sorted member ids; the empty set comes first.
std::vector<OrderIdeal> enumerate_order_ideals(const VertexColoredPoset& P);
std::vector<OrderIdeal> enumerate_order_filters(const VertexColoredPoset& P);

// Lattice together with the subset each vertex stands for. elements[v] is vertex v.
struct SubsetLattice {
  ColoredLattice lattice;
  std::vector<OrderIdeal> elements;
  std::size_t index_of(const OrderIdeal& x) const;
};

SubsetLattice ideal_lattice(const VertexColoredPoset& P);
SubsetLattice filter_lattice(const VertexColoredPoset& P);
ColoredLattice j_lattice(const VertexColoredPoset& P);
ColoredLattice m_lattice(const VertexColoredPoset& P);

// Vertex i of the result is join_irreducible_elements(L)[i] (resp. meet_...), with the
// lattice vertex names as ids.
VertexColoredPoset join_irreducibles(const ColoredLattice& L);
VertexColoredPoset meet_irreducibles(const ColoredLattice& L);

// Members index into join_irreducibles(L) / meet_irreducibles(L).
OrderIdeal canonical_iso_to_ideals(const ColoredLattice& L, std::size_t x);
OrderIdeal canonical_iso_to_filters(const ColoredLattice& L, std::size_t x);

VertexColoredPoset dual(const VertexColoredPoset& P);
VertexColoredPoset recolor(const VertexColoredPoset& P, const std::map<int, int>& sigma);
// Vertices of P come first, tagged "1:", then Q's, tagged "2:".
VertexColoredPoset disjoint_sum(const VertexColoredPoset& P, const VertexColoredPoset& Q);

}  // namespace dlat
