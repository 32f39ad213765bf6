#include "dlat/serialize.hpp"

#include <array>
#include <map>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"

namespace dlat {

using nlohmann::json;

Family parse_family(const std::string& s) {
  if (s == "A" || s == "L") return Family::A;
  if (s == "D") return Family::D;
  if (s == "tilde") return Family::tilde;
  if (s == "tab") return Family::tab;
  throw InvalidInput("unknown family '" + s + "' (expected A, D, tilde or tab)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::tilde: return "tilde";
    case Family::tab: return "tab";
  }
  return "?";
}

json poset_to_json(const VertexColoredPoset& P) {
  json verts = json::array(), covers = json::array();
  for (std::size_t v = 0; v < P.size(); ++v) verts.push_back({{"id", P.id(v)}, {"color", P.color(v)}});
  for (auto [x, y] : P.covers()) covers.push_back(json::array({P.id(x), P.id(y)}));
  return {{"vertices", verts}, {"covers", covers}};
}

VertexColoredPoset poset_from_json(const json& j) {
  try {
    std::vector<std::pair<std::string, int>> verts;
    for (const auto& v : j.at("vertices")) verts.emplace_back(v.at("id").get<std::string>(), v.at("color").get<int>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw InvalidInput("poset json: each cover must be a pair of ids");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return VertexColoredPoset::create_by_id(verts, covers);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("poset json: ") + e.what());
  }
}

json lattice_to_json(const ColoredLattice& L) {
  json verts = json::array(), edges = json::array();
  for (const auto& nm : L.names()) verts.push_back(nm);
  for (const auto& e : L.edges())
    edges.push_back({{"from", L.name(e.from)}, {"to", L.name(e.to)}, {"color", e.color}});
  return {{"vertices", verts}, {"edges", edges}};
}

ColoredLattice lattice_from_json(const json& j) {
  try {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> at;
    for (const auto& v : j.at("vertices")) {
      at.emplace(v.get<std::string>(), names.size());
      names.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto f = at.find(e.at("from").get<std::string>());
      auto t = at.find(e.at("to").get<std::string>());
      if (f == at.end() || t == at.end()) throw InvalidInput("lattice json: edge mentions unknown vertex");
      edges.push_back({f->second, t->second, e.at("color").get<int>()});
    }
    return ColoredLattice::from_edges(std::move(names), std::move(edges));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("lattice json: ") + e.what());
  }
}

ColoredLattice build_family(const BoxSpec& spec, Family family) {
  switch (family) {
    case Family::A: return build_l_a(spec);
    case Family::D: return build_d_a(spec);
    case Family::tilde: return build_l_tilde(spec);
    case Family::tab: return build_l_tab(spec);
  }
  throw InvalidInput("unknown family");
}

json type_a_lattice_to_json(const BoxSpec& spec, Family family, const ColoredLattice& L) {
  json out = lattice_to_json(L);
  out["family"] = family_name(family);
  out["k"] = spec.k;
  out["N"] = spec.N;
  if (family == Family::tilde) return out;
  json coords = json::object();
  for (const auto& nm : L.names()) {
    auto s = parse_partition(spec, nm);
    Tableau t = family == Family::D ? gamma_pt(spec, s) : partition_to_tableau_L(spec, s);
    coords[nm] = {{"partition", format(s)},
                  {"tableau", format(t)},
                  {"circle", format(tableau_to_circle(spec, t))},
                  {"diagonal", format(partition_to_diagonal(spec, s))}};
  }
  out["coordinates"] = coords;
  return out;
}

std::string lattice_to_dot(const ColoredLattice& L, const std::string& title) {
  static constexpr std::array<const char*, 10> palette = {
      "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"};
  auto rank = rank_function(L);
  std::string out = "digraph \"" + title + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < L.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + L.name(v) + "\"];\n";
  if (rank) {
    std::map<int, std::vector<std::size_t>> levels;
    for (std::size_t v = 0; v < L.size(); ++v) levels[(*rank)[v]].push_back(v);
    for (const auto& [r, vs] : levels) {
      out += "  { rank=same;";
      for (auto v : vs) out += " n" + std::to_string(v) + ";";
      out += " }\n";
    }
  }
  for (const auto& e : L.edges())
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           std::to_string(e.color) + "\", color=\"" + palette[(e.color - 1 + palette.size()) % palette.size()] +
           "\"];\n";
  return out + "}\n";
}

}  // namespace dlat
