#include "dlat/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/isomorphism.hpp"
#include "dlat/oracle.hpp"
#include "dlat/solver.hpp"

namespace dlat::verify {

namespace {

std::optional<std::size_t> position(const std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = i;
  return f;
}

OrderIdeal principal(const VertexColoredPoset& P, std::size_t v, bool down) {
  OrderIdeal x;
  for (std::size_t u = 0; u < P.size(); ++u)
    if (down ? P.leq(u, v) : P.leq(v, u)) x.members.push_back(u);
  return x;
}

// Members of x restricted to [lo, hi), shifted down by lo.
OrderIdeal slice(const OrderIdeal& x, std::size_t lo, std::size_t hi) {
  OrderIdeal out;
  for (auto v : x.members)
    if (v >= lo && v < hi) out.members.push_back(v - lo);
  return out;
}

std::string spec_tag(const BoxSpec& spec) {
  return "(k=" + std::to_string(spec.k) + ",N=" + std::to_string(spec.N) + ")";
}

}  // namespace

std::string ideal_round_trip(const ColoredLattice& L) {
  if (!is_distributive(L)) return "not a distributive lattice";
  auto J = ideal_lattice(join_irreducibles(L));
  std::vector<std::size_t> f;
  for (std::size_t x = 0; x < L.size(); ++x) f.push_back(J.index_of(canonical_iso_to_ideals(L, x)));
  if (!oracle::check_constructed_iso(L, J.lattice, f)) return "x -> {join irreducibles below x} is not a colored isomorphism";
  return "";
}

std::string filter_round_trip(const ColoredLattice& L) {
  if (!is_distributive(L)) return "not a distributive lattice";
  auto F = filter_lattice(meet_irreducibles(L));
  std::vector<std::size_t> f;
  for (std::size_t x = 0; x < L.size(); ++x) f.push_back(F.index_of(canonical_iso_to_filters(L, x)));
  if (!oracle::check_constructed_iso(L, F.lattice, f)) return "x -> {meet irreducibles above x} is not a colored isomorphism";
  return "";
}

std::string poset_round_trips(const VertexColoredPoset& P) {
  auto J = ideal_lattice(P);
  auto ji = join_irreducible_elements(J.lattice);
  std::vector<std::size_t> f;
  for (std::size_t v = 0; v < P.size(); ++v) {
    auto p = position(ji, J.index_of(principal(P, v, true)));
    if (!p) return "principal ideal of " + P.id(v) + " is not join irreducible";
    f.push_back(*p);
  }
  if (!oracle::check_poset_iso(P, join_irreducibles(J.lattice), f)) return "P is not j(J(P)) via principal ideals";

  auto F = filter_lattice(P);
  auto mi = meet_irreducible_elements(F.lattice);
  f.clear();
  for (std::size_t v = 0; v < P.size(); ++v) {
    auto p = position(mi, F.index_of(principal(P, v, false)));
    if (!p) return "principal filter of " + P.id(v) + " is not meet irreducible";
    f.push_back(*p);
  }
  if (!oracle::check_poset_iso(P, meet_irreducibles(F.lattice), f)) return "P is not m(M(P)) via principal filters";
  return "";
}

std::string operation_identities(const VertexColoredPoset& P, const VertexColoredPoset& Q,
                                 const std::map<int, int>& sigma) {
  const auto L = ideal_lattice(P), K = ideal_lattice(Q);
  const auto ML = filter_lattice(P), MK = filter_lattice(Q);
  const auto ji = join_irreducible_elements(L.lattice);
  const auto mi = meet_irreducible_elements(L.lattice);
  std::vector<std::size_t> kappa;  // kappa[i] = position in mi of the partner of ji[i]
  for (auto j : ji) {
    auto p = position(mi, meet_irreducible_partner(L.lattice, j));
    if (!p) return "partner of a join irreducible is not meet irreducible";
    kappa.push_back(*p);
  }

  // isomorphic lattices have isomorphic j and m; j(L) = m(L)
  if (!oracle::check_poset_iso(join_irreducibles(L.lattice), meet_irreducibles(L.lattice), kappa))
    return "j(L) and m(L) differ";
  {
    std::vector<std::string> names;
    for (const auto& nm : L.lattice.names()) names.push_back("copy " + nm);
    auto copy = rename(L.lattice, names);
    if (!oracle::check_poset_iso(join_irreducibles(copy), join_irreducibles(L.lattice), identity_map(ji.size())))
      return "j of an isomorphic copy differs";
  }

  // isomorphic posets have isomorphic J and M; J(P) = M(P)
  {
    std::vector<std::size_t> f;
    for (const auto& x : L.elements) f.push_back(ML.index_of(complement(P, x)));
    if (!oracle::check_constructed_iso(L.lattice, ML.lattice, f)) return "J(P) and M(P) differ";
  }

  // J of dual / recolor / sum
  {
    auto Jd = ideal_lattice(dual(P));
    std::vector<std::size_t> f;
    for (const auto& x : Jd.elements) f.push_back(L.index_of(complement(P, x)));
    if (!oracle::check_constructed_iso(Jd.lattice, dual(L.lattice), f)) return "J(P*) is not J(P)*";

    auto Js = ideal_lattice(recolor(P, sigma));
    f.clear();
    for (const auto& x : Js.elements) f.push_back(L.index_of(x));
    if (!oracle::check_constructed_iso(Js.lattice, recolor(L.lattice, sigma), f)) return "J(P^s) is not J(P)^s";

    auto Jsum = ideal_lattice(disjoint_sum(P, Q));
    std::vector<ColoredLattice> factors{L.lattice, K.lattice};
    std::vector<std::size_t> sizes{L.lattice.size(), K.lattice.size()};
    f.clear();
    for (const auto& x : Jsum.elements) {
      std::vector<std::size_t> c{L.index_of(slice(x, 0, P.size())), K.index_of(slice(x, P.size(), P.size() + Q.size()))};
      f.push_back(product_index(sizes, c));
    }
    if (!oracle::check_constructed_iso(Jsum.lattice, product(factors), f)) return "J(P+Q) is not J(P)xJ(Q)";
  }

  // M of dual / recolor / sum
  {
    auto Md = filter_lattice(dual(P));
    std::vector<std::size_t> f;
    for (const auto& x : Md.elements) f.push_back(ML.index_of(complement(P, x)));
    if (!oracle::check_constructed_iso(Md.lattice, dual(ML.lattice), f)) return "M(P*) is not M(P)*";

    auto Ms = filter_lattice(recolor(P, sigma));
    f.clear();
    for (const auto& x : Ms.elements) f.push_back(ML.index_of(x));
    if (!oracle::check_constructed_iso(Ms.lattice, recolor(ML.lattice, sigma), f)) return "M(P^s) is not M(P)^s";

    auto Msum = filter_lattice(disjoint_sum(P, Q));
    std::vector<ColoredLattice> factors{ML.lattice, MK.lattice};
    std::vector<std::size_t> sizes{ML.lattice.size(), MK.lattice.size()};
    f.clear();
    for (const auto& x : Msum.elements) {
      std::vector<std::size_t> c{ML.index_of(slice(x, 0, P.size())), MK.index_of(slice(x, P.size(), P.size() + Q.size()))};
      f.push_back(product_index(sizes, c));
    }
    if (!oracle::check_constructed_iso(Msum.lattice, product(factors), f)) return "M(P+Q) is not M(P)xM(Q)";
  }

  // j of dual / recolor / product
  {
    // vertices of j(L*) are the meet irreducibles of L, in index order
    std::vector<std::size_t> f(mi.size());
    for (std::size_t i = 0; i < ji.size(); ++i) f[kappa[i]] = i;
    if (!oracle::check_poset_iso(join_irreducibles(dual(L.lattice)), dual(join_irreducibles(L.lattice)), f))
      return "j(L*) is not j(L)*";
    if (!oracle::check_poset_iso(join_irreducibles(recolor(L.lattice, sigma)),
                                 recolor(join_irreducibles(L.lattice), sigma), identity_map(ji.size())))
      return "j(L^s) is not j(L)^s";

    std::vector<ColoredLattice> factors{L.lattice, K.lattice};
    std::vector<std::size_t> sizes{L.lattice.size(), K.lattice.size()};
    auto prod = product(factors);
    auto jk = join_irreducible_elements(K.lattice);
    const auto kmin = min_element(K.lattice);
    std::vector<std::size_t> g;
    for (auto e : join_irreducible_elements(prod)) {
      auto c = product_coords(sizes, e);
      auto p = c[1] == kmin ? position(ji, c[0]) : position(jk, c[1]);
      if (!p) return "join irreducible of a product is not supported on one factor";
      g.push_back(c[1] == kmin ? *p : ji.size() + *p);
    }
    if (!oracle::check_poset_iso(join_irreducibles(prod),
                                 disjoint_sum(join_irreducibles(L.lattice), join_irreducibles(K.lattice)), g))
      return "j(LxK) is not j(L)+j(K)";
  }

  // m of dual / recolor / product
  {
    if (!oracle::check_poset_iso(meet_irreducibles(dual(L.lattice)), dual(meet_irreducibles(L.lattice)), kappa))
      return "m(L*) is not m(L)*";
    if (!oracle::check_poset_iso(meet_irreducibles(recolor(L.lattice, sigma)),
                                 recolor(meet_irreducibles(L.lattice), sigma), identity_map(mi.size())))
      return "m(L^s) is not m(L)^s";

    std::vector<ColoredLattice> factors{L.lattice, K.lattice};
    std::vector<std::size_t> sizes{L.lattice.size(), K.lattice.size()};
    auto prod = product(factors);
    auto mk = meet_irreducible_elements(K.lattice);
    const auto kmax = max_element(K.lattice);
    std::vector<std::size_t> g;
    for (auto e : meet_irreducible_elements(prod)) {
      auto c = product_coords(sizes, e);
      auto p = c[1] == kmax ? position(mi, c[0]) : position(mk, c[1]);
      if (!p) return "meet irreducible of a product is not supported on one factor";
      g.push_back(c[1] == kmax ? *p : mi.size() + *p);
    }
    if (!oracle::check_poset_iso(meet_irreducibles(prod),
                                 disjoint_sum(meet_irreducibles(L.lattice), meet_irreducibles(K.lattice)), g))
      return "m(LxK) is not m(L)+m(K)";
  }
  return "";
}

std::string structure(const ColoredLattice& L) {
  if (!is_lattice(L)) return "not a lattice";
  if (!is_diamond_colored(L)) return "not diamond colored";
  if (!is_topographically_balanced(L)) return "not topographically balanced";
  if (!is_distributive(L)) return "not distributive";
  if (!is_modular(L)) return "not modular";
  auto rank = rank_function(L);
  if (!rank) return "no rank function";
  if (!rank_identity_holds(L, *rank)) return "rank identity fails";
  auto rep = oracle::check_lattice_laws(L);
  if (!rep.lattice || !rep.distributive || !rep.modular || !rep.rank_identity)
    return "oracle disagrees on lattice laws";
  return "";
}

namespace {

template <class T, class F>
std::vector<std::pair<Partition, int>> to_partitions(const std::vector<UpEdge<T>>& edges, F back) {
  std::vector<std::pair<Partition, int>> out;
  for (const auto& e : edges) out.emplace_back(back(e.to), e.color);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string coordinates(const BoxSpec& spec) {
  const auto L = build_l_a(spec);
  const auto shapes = all_partitions(spec);
  if (L.size() != shapes.size()) return "lattice size differs from the number of shapes " + spec_tag(spec);
  for (const auto& s : shapes) {
    const auto tag = format(s) + " " + spec_tag(spec);
    auto t = partition_to_tableau_L(spec, s);
    auto c = tableau_to_circle(spec, t);
    auto d = partition_to_diagonal(spec, s);
    if (tableau_to_partition_L(spec, t) != s) return "tableau round trip fails at " + tag;
    if (circle_to_tableau(spec, c) != t) return "circle round trip fails at " + tag;
    if (diagonal_to_partition(spec, d) != s) return "diagonal round trip fails at " + tag;
    if (ideal_to_partition(spec, partition_to_ideal(spec, s)) != s) return "ideal round trip fails at " + tag;

    auto ep = to_partitions(l_up_edges(spec, s), [](const Partition& p) { return p; });
    auto et = to_partitions(l_up_edges(spec, t), [&](const Tableau& u) { return tableau_to_partition_L(spec, u); });
    auto ec = to_partitions(l_up_edges(spec, c), [&](const CircleState& u) {
      return tableau_to_partition_L(spec, circle_to_tableau(spec, u));
    });
    auto ed = to_partitions(l_up_edges(spec, d), [&](const DiagonalCoords& u) { return diagonal_to_partition(spec, u); });
    std::vector<std::pair<Partition, int>> el;
    for (const auto& nb : L.up(L.index_of(format(s)))) el.emplace_back(parse_partition(spec, L.name(nb.vertex)), nb.color);
    std::sort(el.begin(), el.end());
    if (ep != et) return "partition and tableau edges differ at " + tag;
    if (ep != ec) return "partition and circle edges differ at " + tag;
    if (ep != ed) return "partition and diagonal edges differ at " + tag;
    if (ep != el) return "partition edges differ from the ideal lattice at " + tag;
    for (const auto& [p, col] : ep)
      if (col < 1 || col > spec.N - 1) return "edge color out of range at " + tag;
  }
  return "";
}

std::string transport(const BoxSpec& spec) {
  const auto shapes = all_partitions(spec);
  std::size_t edge_count = 0;
  for (const auto& s : shapes) {
    const auto tag = format(s) + " " + spec_tag(spec);
    auto ep = to_partitions(d_up_edges(spec, s), [](const Partition& p) { return p; });
    auto c = gamma_tc(spec, gamma_pt(spec, s));
    auto ec = to_partitions(d_up_edges(spec, c), [&](const CircleState& u) { return gamma_tp(spec, gamma_ct(spec, u)); });
    auto d = partition_to_diagonal(spec, s);
    auto ed = to_partitions(d_up_edges(spec, d), [&](const DiagonalCoords& u) { return diagonal_to_partition(spec, u); });
    if (ep != ec) return "partition and circle moves differ at " + tag;
    if (ep != ed) return "partition and diagonal moves differ at " + tag;
    for (const auto& [t, col] : ep) {
      if (!is_legal_domino_move(spec, s, t)) return "edge " + tag + " -> " + format(t) + " is not a domino move";
      auto ct = gamma_tc(spec, gamma_pt(spec, t));
      auto bc = beta_circ(spec, col);
      for (int i = 0; i < spec.N; ++i)
        if (ct.bits[i] - c.bits[i] != bc.delta[i]) return "circle difference is not beta_circ at " + tag;
      auto dt = partition_to_diagonal(spec, t);
      auto bd = beta_diag(spec, col);
      for (int i = 0; i < spec.N - 1; ++i)
        if (dt.values[i] - d.values[i] != bd.delta[i]) return "diagonal difference is not beta_diag at " + tag;
    }
    edge_count += ep.size();
  }
  std::size_t legal = 0;
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = a + 1; b < shapes.size(); ++b) legal += is_legal_domino_move(spec, shapes[a], shapes[b]);
  if (legal != edge_count)
    return "geometric moves (" + std::to_string(legal) + ") and edges (" + std::to_string(edge_count) + ") differ " +
           spec_tag(spec);
  return "";
}

std::string phi_iso(const BoxSpec& spec) {
  const auto L = build_l_a(spec);
  const auto D = build_d_a(spec);
  std::vector<std::size_t> f;
  for (std::size_t v = 0; v < L.size(); ++v) {
    auto s = parse_partition(spec, L.name(v));
    auto t = phi(spec, s);
    if (phi_inverse(spec, t) != s) return "phi_inverse(phi(" + format(s) + ")) differs " + spec_tag(spec);
    if (phi(spec, phi_inverse(spec, s)) != s) return "phi(phi_inverse(" + format(s) + ")) differs " + spec_tag(spec);
    if (apply_p(spec, partition_to_diagonal(spec, s)) != partition_to_diagonal(spec, t))
      return "apply_p does not match phi at " + format(s) + " " + spec_tag(spec);
    f.push_back(D.index_of(format(t)));
  }
  if (!oracle::check_constructed_iso(L, D, f)) return "phi is not a colored isomorphism " + spec_tag(spec);

  auto M = move_matrix(spec);
  auto inv = integer_inverse(M.entries);
  if (!inv) return "move matrix has no integer inverse " + spec_tag(spec);
  if (M.entries * *inv != IntMatrix::identity(spec.N - 1)) return "P * P^-1 is not the identity " + spec_tag(spec);

  auto dist = oracle::bfs_all_pairs(D);
  const auto lo = D.index_of(format(d_min(spec)));
  for (std::size_t v = 0; v < D.size(); ++v) {
    auto c = decompose(spec, partition_to_diagonal(spec, parse_partition(spec, D.name(v))));
    int sum = 0;
    for (int x : c) sum += x;
    if (sum != dist(lo, v)) return "decompose of " + D.name(v) + " does not sum to its rank " + spec_tag(spec);
  }
  return "";
}

std::string solver(const BoxSpec& spec) {
  {
    auto P = build_p_a(spec);
    auto J = ideal_lattice(P);
    auto dist = oracle::bfs_all_pairs(J.lattice);
    for (std::size_t s = 0; s < J.lattice.size(); ++s)
      for (std::size_t t = 0; t < J.lattice.size(); ++t)
        for (Via via : {Via::join, Via::meet}) {
          auto sol = solve_distributive(P, J, s, t, via);
          auto tag = J.lattice.name(s) + " to " + J.lattice.name(t) + " " + spec_tag(spec);
          if (sol.distance != dist(s, t)) return "ideal solver distance differs from BFS for " + tag;
          if (static_cast<int>(sol.path.length()) != sol.distance) return "ideal solver path length wrong for " + tag;
          if (sol.path.vertices.front() != s || sol.path.vertices.back() != t) return "ideal solver endpoints wrong for " + tag;
          auto w = via == Via::join ? join(J.lattice, s, t) : meet(J.lattice, s, t);
          if (sol.waypoint != w) return "ideal solver waypoint wrong for " + tag;
        }
  }
  auto D = build_d_a(spec);
  auto dist = oracle::bfs_all_pairs(D);
  std::vector<Partition> shapes;
  for (const auto& nm : D.names()) shapes.push_back(parse_partition(spec, nm));
  for (std::size_t s = 0; s < D.size(); ++s)
    for (std::size_t t = 0; t < D.size(); ++t)
      for (Via via : {Via::join, Via::meet}) {
        auto sol = solve_domino(spec, shapes[s], shapes[t], via);
        auto tag = D.name(s) + " to " + D.name(t) + " " + spec_tag(spec);
        if (sol.distance != dist(s, t)) return "domino solver distance differs from BFS for " + tag;
        if (static_cast<int>(sol.steps.size()) != sol.distance) return "domino path length wrong for " + tag;
        if (sol.shapes.front() != shapes[s] || sol.shapes.back() != shapes[t]) return "domino endpoints wrong for " + tag;
        for (std::size_t i = 0; i < sol.steps.size(); ++i) {
          auto a = D.index_of(format(sol.shapes[i])), b = D.index_of(format(sol.shapes[i + 1]));
          auto col = sol.steps[i].dir == Direction::up ? D.edge_color(a, b) : D.edge_color(b, a);
          if (!col || *col != sol.steps[i].color) return "domino path step is not a recorded edge for " + tag;
        }
        auto w = via == Via::join ? join(D, s, t) : meet(D, s, t);
        if (D.index_of(format(sol.waypoint)) != w) return "domino waypoint wrong for " + tag;
      }
  return "";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite}, {"passed", passed()}, {"checks", arr}};
}

std::vector<std::string> suite_names() { return {"fundamental", "coordinates", "iso", "solver", "structure"}; }

namespace {

std::vector<BoxSpec> small_specs() {
  std::vector<BoxSpec> out;
  for (int N = 2; N <= 9; ++N)
    for (int k = 1; k < N; ++k)
      if (k * (N - k) <= 8) out.push_back(BoxSpec::make(k, N));
  return out;
}

template <class F>
CheckResult run_check(const std::string& name, F&& body) {
  try {
    auto msg = body();
    return {name, msg.empty(), msg};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::optional<BoxSpec> spec, std::uint64_t seed) {
  SuiteReport rep{name, {}};
  std::vector<BoxSpec> specs = spec ? std::vector<BoxSpec>{*spec} : small_specs();

  if (name == "fundamental") {
    std::mt19937_64 rng(seed);
    std::vector<VertexColoredPoset> posets;
    for (int i = 0; i < 50; ++i) posets.push_back(oracle::random_poset(rng, 8, 3));
    rep.checks.push_back(run_check("poset round trips on 50 random posets", [&]() -> std::string {
      for (std::size_t i = 0; i < posets.size(); ++i)
        if (auto m = poset_round_trips(posets[i]); !m.empty()) return "poset " + std::to_string(i) + ": " + m;
      return "";
    }));
    rep.checks.push_back(run_check("lattice round trips on their ideal and filter lattices", [&]() -> std::string {
      for (std::size_t i = 0; i < posets.size(); ++i) {
        auto J = j_lattice(posets[i]);
        auto M = m_lattice(posets[i]);
        for (const auto& m : {structure(J), structure(M), ideal_round_trip(J), filter_round_trip(J),
                              ideal_round_trip(M), filter_round_trip(M)})
          if (!m.empty()) return "poset " + std::to_string(i) + ": " + m;
      }
      return "";
    }));
    rep.checks.push_back(run_check("operation identities on 50 random pairs", [&]() -> std::string {
      std::uniform_int_distribution<int> col(1, 3);
      for (int i = 0; i < 50; ++i) {
        auto P = oracle::random_poset(rng, 6, 3);
        auto Q = oracle::random_poset(rng, 6, 3);
        std::map<int, int> sigma{{1, col(rng)}, {2, col(rng)}, {3, col(rng)}};
        if (auto m = operation_identities(P, Q, sigma); !m.empty()) return "pair " + std::to_string(i) + ": " + m;
      }
      return "";
    }));
  } else if (name == "coordinates") {
    for (const auto& s : specs) rep.checks.push_back(run_check("coordinates " + spec_tag(s), [&] { return coordinates(s); }));
  } else if (name == "iso") {
    for (const auto& s : specs) {
      rep.checks.push_back(run_check("phi isomorphism " + spec_tag(s), [&] { return phi_iso(s); }));
      rep.checks.push_back(run_check("move transport " + spec_tag(s), [&] { return transport(s); }));
    }
  } else if (name == "solver") {
    for (const auto& s : specs) rep.checks.push_back(run_check("solver vs BFS " + spec_tag(s), [&] { return solver(s); }));
  } else if (name == "structure") {
    for (const auto& s : specs) {
      rep.checks.push_back(run_check("structure " + spec_tag(s), [&]() -> std::string {
        for (const auto& L : {build_l_a(s), build_d_a(s), build_l_tab(s)})
          if (auto m = structure(L); !m.empty()) return m;
        auto T = build_l_tilde(s);
        if (T.size() <= 300)
          if (auto m = structure(T); !m.empty()) return "L-tilde: " + m;
        if (!check_full_length_sublattice(T, l_tab_members(s))) return "tableau lattice is not full length";
        return "";
      }));
    }
  } else {
    throw InvalidInput("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace dlat::verify
