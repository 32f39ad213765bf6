#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/type_a.hpp"

namespace dlat {

// Checkerboard anchored so the upper right cell (1, N-k) is red.
bool is_red(const BoxSpec& spec, int r, int c);

enum class Space { part, circ, diag };

struct MoveVector {
  int color = 0;
  std::vector<int> delta;
  Space space = Space::diag;
  friend bool operator==(const MoveVector&, const MoveVector&) = default;
};

MoveVector beta_diag(const BoxSpec& spec, int l);
// Up-move of color l out of s, if there is one.
std::optional<std::pair<Partition, MoveVector>> beta_part(const BoxSpec& spec, const Partition& s, int l);
// The color-l up-move in D tableau terms replaces entry .second by entry .first.
std::pair<int, int> d_tableau_swap(const BoxSpec& spec, int l);
MoveVector beta_circ(const BoxSpec& spec, int l);

std::vector<UpEdge<Partition>> d_up_edges(const BoxSpec& spec, const Partition& s);
// Same edges, generated directly in circle / diagonal coordinates.
std::vector<UpEdge<CircleState>> d_up_edges(const BoxSpec& spec, const CircleState& c);
std::vector<UpEdge<DiagonalCoords>> d_up_edges(const BoxSpec& spec, const DiagonalCoords& d);

// Vertex order follows all_partitions(spec); names are partition strings.
ColoredLattice build_d_a(const BoxSpec& spec);

bool is_legal_domino_move(const BoxSpec& spec, const Partition& a, const Partition& b);

Tableau gamma_pt(const BoxSpec& spec, const Partition& s);
Partition gamma_tp(const BoxSpec& spec, const Tableau& t);
CircleState gamma_tc(const BoxSpec& spec, const Tableau& t);
Tableau gamma_ct(const BoxSpec& spec, const CircleState& c);

Partition d_min(const BoxSpec& spec);
Partition d_max(const BoxSpec& spec);
DiagonalCoords m_diag(const BoxSpec& spec);

// The two closed-form shapes min{k-i, N-k} and min{k-i+1, N-k}.
Partition staircase_short(const BoxSpec& spec);
Partition staircase_long(const BoxSpec& spec);

// ASCII: '#' shaded, '.' empty; the red corner shows '@' shaded, 'o' empty.
std::string render_shape(const BoxSpec& spec, const Partition& s);
// 'R' / 'W' per cell.
std::string render_board(const BoxSpec& spec);

}  // namespace dlat
