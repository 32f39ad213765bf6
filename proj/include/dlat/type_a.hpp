#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"

namespace dlat {

// k rows, N - k columns, colors 1..N-1.
struct BoxSpec {
  int k = 1;
  int N = 2;

  static BoxSpec make(int k, int N);  // throws InvalidInput unless 1 <= k <= N-1
  int width() const { return N - k; }
  int colors() const { return N - 1; }
  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

struct Partition {
  std::vector<int> parts;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

enum class Order { increasing, decreasing };

struct Tableau {
  std::vector<int> entries;
  Order order = Order::increasing;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Which physical numbering of the circle boxes the bit indices refer to.
enum class Scheme { L, D };

struct CircleState {
  std::vector<int> bits;  // bits[i-1] is box i
  Scheme scheme = Scheme::L;
  friend bool operator==(const CircleState&, const CircleState&) = default;
};

struct DiagonalCoords {
  std::vector<int> values;  // values[i-1] is d_i
  friend bool operator==(const DiagonalCoords&, const DiagonalCoords&) = default;
  friend auto operator<=>(const DiagonalCoords&, const DiagonalCoords&) = default;
};

bool is_valid(const BoxSpec& spec, const Partition& s);
void require_valid(const BoxSpec& spec, const Partition& s);
bool is_valid(const BoxSpec& spec, const Tableau& t);
bool is_valid(const BoxSpec& spec, const CircleState& c);
bool is_valid(const BoxSpec& spec, const DiagonalCoords& d);

// All C(N,k) shapes, lexicographically increasing.
std::vector<Partition> all_partitions(const BoxSpec& spec);
std::vector<Tableau> all_tableaux(const BoxSpec& spec, Order order);

// Color of box (r,c), which is also the index of the diagonal through it.
int box_color(const BoxSpec& spec, int r, int c);

VertexColoredPoset build_p_a(const BoxSpec& spec);
std::size_t p_a_index(const BoxSpec& spec, int r, int c);
// Vertex names are partition strings; vertex order follows the ideal enumeration.
ColoredLattice build_l_a(const BoxSpec& spec);

Partition ideal_to_partition(const BoxSpec& spec, const OrderIdeal& x);
OrderIdeal partition_to_ideal(const BoxSpec& spec, const Partition& s);

Tableau partition_to_tableau_L(const BoxSpec& spec, const Partition& s);
Partition tableau_to_partition_L(const BoxSpec& spec, const Tableau& t);

// Indicator maps. Increasing tableaux get the L scheme, decreasing ones the D scheme.
CircleState tableau_to_circle(const BoxSpec& spec, const Tableau& t);
Tableau circle_to_tableau(const BoxSpec& spec, const CircleState& c);

DiagonalCoords partition_to_diagonal(const BoxSpec& spec, const Partition& s);
Partition diagonal_to_partition(const BoxSpec& spec, const DiagonalCoords& d);

template <class T>
struct UpEdge {
  T to;
  int color;
  friend bool operator==(const UpEdge&, const UpEdge&) = default;
};

std::vector<UpEdge<Partition>> l_up_edges(const BoxSpec& spec, const Partition& s);
std::vector<UpEdge<Tableau>> l_up_edges(const BoxSpec& spec, const Tableau& t);
std::vector<UpEdge<CircleState>> l_up_edges(const BoxSpec& spec, const CircleState& c);
std::vector<UpEdge<DiagonalCoords>> l_up_edges(const BoxSpec& spec, const DiagonalCoords& d);

// Product of k chains; chain r has positions 0..N-k and the step into position c
// has color N-k+r-c. Vertex (c_1..c_k) is named "(c_1,...,c_k)".
ColoredLattice build_l_tilde(const BoxSpec& spec);
std::size_t l_tilde_index(const BoxSpec& spec, const std::vector<int>& positions);
// Indices in build_l_tilde of the weakly decreasing position vectors.
std::vector<std::size_t> l_tab_members(const BoxSpec& spec);
ColoredLattice build_l_tab(const BoxSpec& spec);

Partition partition_meet(const Partition& a, const Partition& b);
Partition partition_join(const Partition& a, const Partition& b);
int partition_rank(const Partition& s);

std::string format(const Partition& s);       // "4,3"
std::string format(const Tableau& t);         // "{1,3}"
std::string format(const CircleState& c);     // "101000"
std::string format(const DiagonalCoords& d);  // "(1,1,2,2,1)"

// Parsers validate against the spec and report the offending position.
Partition parse_partition(const BoxSpec& spec, std::string_view text);
Tableau parse_tableau(const BoxSpec& spec, std::string_view text, Order order);
CircleState parse_circle(const BoxSpec& spec, std::string_view text, Scheme scheme);
DiagonalCoords parse_diagonal(const BoxSpec& spec, std::string_view text);

}  // namespace dlat
