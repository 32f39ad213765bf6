#pragma once

#include <string>

#include <json.hpp>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"
#include "dlat/type_a.hpp"

namespace dlat {

enum class Family { A, D, tilde, tab };

Family parse_family(const std::string& s);
std::string family_name(Family f);

// {"vertices": [{"id", "color"}], "covers": [[id, id]]}
nlohmann::json poset_to_json(const VertexColoredPoset& P);
VertexColoredPoset poset_from_json(const nlohmann::json& j);

// {"vertices": [name], "edges": [{"from", "to", "color"}]}
nlohmann::json lattice_to_json(const ColoredLattice& L);
ColoredLattice lattice_from_json(const nlohmann::json& j);

// Base schema plus "family", "k", "N" and, for shape families, a "coordinates" object
// giving partition/tableau/circle/diagonal per vertex.
nlohmann::json type_a_lattice_to_json(const BoxSpec& spec, Family family, const ColoredLattice& L);
ColoredLattice build_family(const BoxSpec& spec, Family family);

// Graphviz, bottom-to-top with one rank=same group per rank level.
std::string lattice_to_dot(const ColoredLattice& L, const std::string& title);

}  // namespace dlat
