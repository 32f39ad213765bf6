#include "dlat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/isomorphism.hpp"
#include "dlat/serialize.hpp"
#include "dlat/solver.hpp"
#include "dlat/verify.hpp"

namespace dlat {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BoxSpec make_spec(int k, int N) {
  if (k < 1 || N < 2 || k > N - 1)
    throw UsageError("need 1 <= k <= N-1 (got k=" + std::to_string(k) + ", N=" + std::to_string(N) + ")");
  return BoxSpec::make(k, N);
}

struct System {
  std::string sys = "part";  // part | tab | circ | diag
  char fam = 'L';            // L | D
};

System parse_system(const std::string& text, char default_fam) {
  System s;
  auto colon = text.find(':');
  s.sys = text.substr(0, colon);
  s.fam = default_fam;
  if (colon != std::string::npos) {
    auto f = text.substr(colon + 1);
    if (f != "L" && f != "D" && f != "A") throw UsageError("unknown family '" + f + "' (expected L or D)");
    s.fam = f == "D" ? 'D' : 'L';
  }
  if (s.sys != "part" && s.sys != "tab" && s.sys != "circ" && s.sys != "diag")
    throw UsageError("unknown coordinate system '" + s.sys + "' (expected part, tab, circ or diag)");
  return s;
}

Partition read_value(const BoxSpec& spec, const System& s, const std::string& text) {
  if (s.sys == "part") return parse_partition(spec, text);
  if (s.sys == "diag") return diagonal_to_partition(spec, parse_diagonal(spec, text));
  if (s.sys == "tab") {
    if (s.fam == 'L') return tableau_to_partition_L(spec, parse_tableau(spec, text, Order::increasing));
    return gamma_tp(spec, parse_tableau(spec, text, Order::decreasing));
  }
  if (s.fam == 'L')
    return tableau_to_partition_L(spec, circle_to_tableau(spec, parse_circle(spec, text, Scheme::L)));
  return gamma_tp(spec, gamma_ct(spec, parse_circle(spec, text, Scheme::D)));
}

std::string write_value(const BoxSpec& spec, const System& s, const Partition& p) {
  if (s.sys == "part") return format(p);
  if (s.sys == "diag") return format(partition_to_diagonal(spec, p));
  Tableau t = s.fam == 'L' ? partition_to_tableau_L(spec, p) : gamma_pt(spec, p);
  if (s.sys == "tab") return format(t);
  return format(s.fam == 'L' ? tableau_to_circle(spec, t) : gamma_tc(spec, t));
}

std::string direction_name(Direction d) { return d == Direction::up ? "up" : "down"; }

json multiset_json(const ColorMultiset& m) {
  json j = json::object();
  for (auto [c, n] : m.counts()) j[std::to_string(c)] = n;
  return j;
}

std::string indent(const std::string& block) {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    auto end = block.find('\n', start);
    out += "    " + block.substr(start, end - start) + "\n";
    start = end == std::string::npos ? block.size() : end + 1;
  }
  return out;
}

void print_playback(std::ostream& out, const BoxSpec& spec, const std::vector<Partition>& shapes,
                    const std::vector<Step>& steps) {
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i == 0)
      out << "start " << format(shapes[i]) << "\n";
    else
      out << "move " << i << ": " << direction_name(steps[i - 1].dir) << " color " << steps[i - 1].color << " -> "
          << format(shapes[i]) << "\n";
    out << indent(render_shape(spec, shapes[i]));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored distributive lattices and the Domino game", "dlat"};
  app.require_subcommand(1);

  int k = 0, N = 0;
  auto add_spec = [&](CLI::App* sub, bool required) {
    auto a = sub->add_option("-k", k, "rows of the box");
    auto b = sub->add_option("-N", N, "k plus the number of columns");
    if (required) {
      a->required();
      b->required();
    }
  };

  auto* lat = app.add_subcommand("lattice", "build and export a lattice");
  std::string family = "A", fmt = "json", poset_file;
  bool filters = false, irreducibles = false;
  add_spec(lat, false);
  lat->add_option("--family", family, "A, D, tilde or tab");
  lat->add_option("--format", fmt, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  lat->add_option("--poset", poset_file, "build J (or M) of a poset read from a JSON file");
  lat->add_flag("--filters", filters, "with --poset: lattice of filters instead of ideals");
  lat->add_flag("--irreducibles", irreducibles, "emit the poset of join irreducibles instead");

  auto* conv = app.add_subcommand("convert", "convert between coordinate systems");
  std::string from_sys, to_sys, map, value;
  bool matrix = false;
  add_spec(conv, true);
  conv->add_option("--from", from_sys, "source system: part|tab|circ|diag[:L|D]");
  conv->add_option("--to", to_sys, "target system: part|tab|circ|diag[:L|D]");
  conv->add_option("--map", map, "phi or phi-inverse")->check(CLI::IsMember({"phi", "phi-inverse"}));
  conv->add_flag("--matrix", matrix, "print the move matrix and the minimum of D");
  conv->add_option("value", value, "the value to convert");

  auto* sol = app.add_subcommand("solve", "shortest game between two shapes");
  std::string s_from, s_to, via = "join", s_fmt = "text", s_family = "D";
  add_spec(sol, true);
  sol->add_option("--from", s_from, "start partition")->required();
  sol->add_option("--to", s_to, "target partition")->required();
  sol->add_option("--via", via, "join or meet")->check(CLI::IsMember({"join", "meet"}));
  sol->add_option("--format", s_fmt, "text or json")->check(CLI::IsMember({"text", "json"}));
  sol->add_option("--family", s_family, "D (domino game) or A (box lattice)")->check(CLI::IsMember({"D", "A"}));

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = 1;
  add_spec(ver, false);
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (lat->parsed()) {
      if (!poset_file.empty()) {
        auto P = poset_from_json(read_json_file(poset_file));
        auto L = filters ? m_lattice(P) : j_lattice(P);
        if (irreducibles)
          out << poset_to_json(filters ? meet_irreducibles(L) : join_irreducibles(L)).dump(2) << "\n";
        else if (fmt == "dot")
          out << lattice_to_dot(L, filters ? "M(P)" : "J(P)");
        else
          out << lattice_to_json(L).dump(2) << "\n";
        return exit_ok;
      }
      auto spec = make_spec(k, N);
      Family f;
      try {
        f = parse_family(family);
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      auto L = build_family(spec, f);
      if (irreducibles)
        out << poset_to_json(join_irreducibles(L)).dump(2) << "\n";
      else if (fmt == "dot")
        out << lattice_to_dot(L, family_name(f) + "(" + std::to_string(spec.k) + "," + std::to_string(spec.N) + ")");
      else
        out << type_a_lattice_to_json(spec, f, L).dump(2) << "\n";
      return exit_ok;
    }

    if (conv->parsed()) {
      auto spec = make_spec(k, N);
      if (matrix) {
        auto M = move_matrix(spec);
        out << format(M.entries) << "m = " << format(m_diag(spec)) << "\n";
        if (value.empty()) return exit_ok;
      }
      if (value.empty()) throw UsageError("convert: missing value");
      System src = parse_system(from_sys.empty() ? "part" : from_sys, map == "phi-inverse" ? 'D' : 'L');
      if (map == "phi" && src.fam != 'L') throw UsageError("--map phi starts from an L system");
      if (map == "phi-inverse" && src.fam != 'D') throw UsageError("--map phi-inverse starts from a D system");
      char dst_default = map.empty() ? src.fam : (src.fam == 'L' ? 'D' : 'L');
      System dst = parse_system(to_sys.empty() ? "part" : to_sys, dst_default);
      if (!map.empty() && dst.fam == src.fam) throw UsageError("--map crosses between L and D; target family must differ");

      auto p = read_value(spec, src, value);
      if (src.fam == 'L' && dst.fam == 'D') p = phi(spec, p);
      if (src.fam == 'D' && dst.fam == 'L') p = phi_inverse(spec, p);
      out << write_value(spec, dst, p) << "\n";
      return exit_ok;
    }

    if (sol->parsed()) {
      auto spec = make_spec(k, N);
      auto a = parse_partition(spec, s_from);
      auto b = parse_partition(spec, s_to);
      const Via v = via == "join" ? Via::join : Via::meet;
      json j{{"family", s_family}, {"k", spec.k}, {"N", spec.N}, {"from", format(a)}, {"to", format(b)}, {"via", via}};
      int distance = 0;
      ColorMultiset census;
      std::vector<Partition> shapes;
      std::vector<Step> steps;
      Partition waypoint;
      if (s_family == "D") {
        auto r = solve_domino(spec, a, b, v);
        distance = r.distance;
        census = r.per_color;
        shapes = r.shapes;
        steps = r.steps;
        waypoint = r.waypoint;
        j["from_moves"] = multiset_json(r.from_moves);
        j["to_moves"] = multiset_json(r.to_moves);
      } else {
        auto P = build_p_a(spec);
        auto J = ideal_lattice(P);
        auto r = solve_distributive(P, J, J.index_of(partition_to_ideal(spec, a)), J.index_of(partition_to_ideal(spec, b)), v);
        distance = r.distance;
        census = r.per_color;
        for (auto x : r.path.vertices) shapes.push_back(ideal_to_partition(spec, J.elements[x]));
        steps = r.path.steps;
        waypoint = ideal_to_partition(spec, J.elements[r.waypoint]);
      }
      if (s_fmt == "json") {
        json path = json::array(), st = json::array();
        for (const auto& p : shapes) path.push_back(format(p));
        for (const auto& s : steps) st.push_back({{"color", s.color}, {"direction", direction_name(s.dir)}});
        j["distance"] = distance;
        j["per_color"] = multiset_json(census);
        j["waypoint"] = format(waypoint);
        j["path"] = path;
        j["steps"] = st;
        out << j.dump(2) << "\n";
      } else {
        out << "distance " << distance << "\n";
        out << "per-color " << census.str() << "\n";
        out << via << " " << format(waypoint) << "\n";
        print_playback(out, spec, shapes, steps);
      }
      return exit_ok;
    }

    if (ver->parsed()) {
      std::optional<BoxSpec> spec;
      if (k != 0 || N != 0) spec = make_spec(k, N);
      auto rep = verify::run_suite(suite, spec, seed);
      out << rep.to_json().dump(2) << "\n";
      return rep.passed() ? exit_ok : exit_verification;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_domain;
  } catch (const NotALattice& e) {
    err << "not a lattice: " << e.what() << "\n";
    return exit_domain;
  } catch (const DegeneratePath& e) {
    err << "degenerate path: " << e.what() << "\n";
    return exit_domain;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return exit_verification;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_verification;
  }
  return exit_usage;
}

}  // namespace dlat
