#include "dlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "dlat/error.hpp"

namespace dlat {

struct ColoredLattice::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Edge> edges;
  std::vector<std::vector<Neighbor>> up;
  std::vector<std::vector<Neighbor>> down;
  std::vector<Bits> below;
  std::vector<Bits> above;

  mutable std::once_flag tables_once;
  mutable std::optional<Tables> tables;
};

namespace {

std::vector<std::size_t> topological_order(std::size_t n, const std::vector<std::vector<Neighbor>>& up) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& adj : up)
    for (const auto& nb : adj) ++indeg[nb.vertex];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (const auto& nb : up[v])
      if (--indeg[nb.vertex] == 0) ready.push_back(nb.vertex);
  }
  if (order.size() != n) throw InvalidInput("cover graph has a cycle");
  return order;
}

std::optional<ColoredLattice::Tables> build_tables(const ColoredLattice& L) {
  const std::size_t n = L.size();
  if (n == 0) return std::nullopt;
  ColoredLattice::Tables t;
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      Bits lower = L.below(x) & L.below(y);
      Bits upper = L.above(x) & L.above(y);
      std::optional<std::size_t> m, j;
      for (auto z = lower.find_first(); z != Bits::npos; z = lower.find_next(z))
        if (lower.is_subset_of(L.below(z))) { m = z; break; }
      for (auto z = upper.find_first(); z != Bits::npos; z = upper.find_next(z))
        if (upper.is_subset_of(L.above(z))) { j = z; break; }
      if (!m || !j) return std::nullopt;
      t.meet[x * n + y] = t.meet[y * n + x] = *m;
      t.join[x * n + y] = t.join[y * n + x] = *j;
    }
  }
  return t;
}

const ColoredLattice::Tables& require_tables(const ColoredLattice& L) {
  const auto& t = L.tables();
  if (!t) throw NotALattice("meet/join not unique: input is not a lattice");
  return *t;
}

}  // namespace

ColoredLattice::ColoredLattice() : impl_(std::make_shared<Impl>()) {}

ColoredLattice ColoredLattice::from_edges(std::vector<std::string> names, std::vector<Edge> edges) {
  auto impl = std::make_shared<Impl>();
  const std::size_t n = names.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!impl->index.emplace(names[v], v).second)
      throw InvalidInput("duplicate vertex name '" + names[v] + "'");
  impl->up.resize(n);
  impl->down.resize(n);
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw InvalidInput("edge endpoint out of range");
    if (e.from == e.to) throw InvalidInput("self-loop at '" + names[e.from] + "'");
    for (const auto& nb : impl->up[e.from])
      if (nb.vertex == e.to) throw InvalidInput("duplicate edge " + names[e.from] + " -> " + names[e.to]);
    impl->up[e.from].push_back({e.to, e.color});
    impl->down[e.to].push_back({e.from, e.color});
  }
  auto order = topological_order(n, impl->up);

  impl->below.assign(n, Bits(n));
  impl->above.assign(n, Bits(n));
  for (auto v : order) {
    impl->below[v].set(v);
    for (const auto& nb : impl->down[v]) impl->below[v] |= impl->below[nb.vertex];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    impl->above[*it].set(*it);
    for (const auto& nb : impl->up[*it]) impl->above[*it] |= impl->above[nb.vertex];
  }
  // x -> y is a cover iff no other lower neighbour of y sits above x.
  for (const auto& e : edges)
    for (const auto& nb : impl->down[e.to])
      if (nb.vertex != e.from && impl->below[nb.vertex].test(e.from))
        throw InvalidInput("edge " + names[e.from] + " -> " + names[e.to] + " is not a cover");

  impl->names = std::move(names);
  impl->edges = std::move(edges);
  ColoredLattice L;
  L.impl_ = std::move(impl);
  return L;
}

std::size_t ColoredLattice::size() const { return impl_->names.size(); }
const std::string& ColoredLattice::name(std::size_t v) const { return impl_->names.at(v); }
const std::vector<std::string>& ColoredLattice::names() const { return impl_->names; }

std::optional<std::size_t> ColoredLattice::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t ColoredLattice::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InvalidInput("no vertex named '" + std::string(name) + "'");
  return *v;
}

const std::vector<Edge>& ColoredLattice::edges() const { return impl_->edges; }
const std::vector<Neighbor>& ColoredLattice::up(std::size_t v) const { return impl_->up.at(v); }
const std::vector<Neighbor>& ColoredLattice::down(std::size_t v) const { return impl_->down.at(v); }

std::optional<int> ColoredLattice::edge_color(std::size_t from, std::size_t to) const {
  for (const auto& nb : impl_->up.at(from))
    if (nb.vertex == to) return nb.color;
  return std::nullopt;
}

bool ColoredLattice::leq(std::size_t x, std::size_t y) const { return impl_->below.at(y).test(x); }
const Bits& ColoredLattice::below(std::size_t x) const { return impl_->below.at(x); }
const Bits& ColoredLattice::above(std::size_t x) const { return impl_->above.at(x); }

const std::optional<ColoredLattice::Tables>& ColoredLattice::tables() const {
  std::call_once(impl_->tables_once, [this] { impl_->tables = build_tables(*this); });
  return impl_->tables;
}

bool is_lattice(const ColoredLattice& L) { return L.tables().has_value(); }

std::size_t meet(const ColoredLattice& L, std::size_t x, std::size_t y) {
  if (x >= L.size() || y >= L.size()) throw InvalidInput("element not in lattice");
  return require_tables(L).meet[x * L.size() + y];
}

std::size_t join(const ColoredLattice& L, std::size_t x, std::size_t y) {
  if (x >= L.size() || y >= L.size()) throw InvalidInput("element not in lattice");
  return require_tables(L).join[x * L.size() + y];
}

std::size_t min_element(const ColoredLattice& L) {
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < L.size(); ++v)
    if (L.down(v).empty()) {
      if (found) throw NotALattice("more than one minimal element");
      found = v;
    }
  if (!found) throw NotALattice("empty graph has no minimum");
  return *found;
}

std::size_t max_element(const ColoredLattice& L) {
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < L.size(); ++v)
    if (L.up(v).empty()) {
      if (found) throw NotALattice("more than one maximal element");
      found = v;
    }
  if (!found) throw NotALattice("empty graph has no maximum");
  return *found;
}

bool is_diamond_colored(const ColoredLattice& L) {
  for (std::size_t v = 0; v < L.size(); ++v) {
    const auto& ups = L.up(v);
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = 0; b < ups.size(); ++b) {
        if (a == b) continue;
        const auto& s = ups[a];
        const auto& t = ups[b];
        for (const auto& su : L.up(s.vertex)) {
          auto tu = L.edge_color(t.vertex, su.vertex);
          if (!tu) continue;
          // opposite sides of the diamond v,s,t,u carry equal colors
          if (su.color != t.color || *tu != s.color) return false;
        }
      }
  }
  return true;
}

namespace {

std::size_t common_up(const ColoredLattice& L, std::size_t s, std::size_t t, std::size_t* where) {
  std::size_t count = 0;
  for (const auto& su : L.up(s))
    if (L.edge_color(t, su.vertex)) {
      ++count;
      if (where) *where = su.vertex;
    }
  return count;
}

std::size_t common_down(const ColoredLattice& L, std::size_t s, std::size_t t, std::size_t* where) {
  std::size_t count = 0;
  for (const auto& sd : L.down(s))
    if (L.edge_color(sd.vertex, t)) {
      ++count;
      if (where) *where = sd.vertex;
    }
  return count;
}

}  // namespace

bool is_topographically_balanced(const ColoredLattice& L) {
  for (std::size_t v = 0; v < L.size(); ++v) {
    const auto& ups = L.up(v);
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = a + 1; b < ups.size(); ++b)
        if (common_up(L, ups[a].vertex, ups[b].vertex, nullptr) != 1) return false;
    const auto& downs = L.down(v);
    for (std::size_t a = 0; a < downs.size(); ++a)
      for (std::size_t b = a + 1; b < downs.size(); ++b)
        if (common_down(L, downs[a].vertex, downs[b].vertex, nullptr) != 1) return false;
  }
  return true;
}

bool is_modular(const ColoredLattice& L) {
  const auto& t = L.tables();
  if (!t) return false;
  const std::size_t n = L.size();
  auto M = [&](std::size_t a, std::size_t b) { return t->meet[a * n + b]; };
  auto J = [&](std::size_t a, std::size_t b) { return t->join[a * n + b]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < n; ++b) {
      if (!L.leq(x, b)) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (J(x, M(a, b)) != M(J(x, a), b)) return false;
    }
  return true;
}

bool is_distributive(const ColoredLattice& L) {
  const auto& t = L.tables();
  if (!t) return false;
  const std::size_t n = L.size();
  auto M = [&](std::size_t a, std::size_t b) { return t->meet[a * n + b]; };
  auto J = [&](std::size_t a, std::size_t b) { return t->join[a * n + b]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y; z < n; ++z)
        if (M(x, J(y, z)) != J(M(x, y), M(x, z))) return false;
  return true;
}

std::optional<std::vector<int>> rank_function(const ColoredLattice& L) {
  const std::size_t n = L.size();
  if (n == 0) return std::vector<int>{};
  std::vector<int> rank(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    auto visit = [&](std::size_t w, int r) {
      if (!seen[w]) {
        seen[w] = 1;
        rank[w] = r;
        queue.push_back(w);
        return true;
      }
      return rank[w] == r;
    };
    for (const auto& nb : L.up(v))
      if (!visit(nb.vertex, rank[v] + 1)) return std::nullopt;
    for (const auto& nb : L.down(v))
      if (!visit(nb.vertex, rank[v] - 1)) return std::nullopt;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvalidInput("rank_function: cover graph is disconnected");
  int lo = *std::min_element(rank.begin(), rank.end());
  for (auto& r : rank) r -= lo;
  return rank;
}

bool rank_identity_holds(const ColoredLattice& L, const std::vector<int>& rank) {
  const std::size_t n = L.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s; t < n; ++t) {
      int up = 2 * rank[join(L, s, t)] - rank[s] - rank[t];
      int down = rank[s] + rank[t] - 2 * rank[meet(L, s, t)];
      if (up != down) return false;
    }
  return true;
}

std::vector<std::size_t> join_irreducible_elements(const ColoredLattice& L) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < L.size(); ++v)
    if (L.down(v).size() == 1) out.push_back(v);
  return out;
}

std::vector<std::size_t> meet_irreducible_elements(const ColoredLattice& L) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < L.size(); ++v)
    if (L.up(v).size() == 1) out.push_back(v);
  return out;
}

std::size_t meet_irreducible_partner(const ColoredLattice& L, std::size_t j) {
  // join of everything not above j
  std::size_t acc = min_element(L);
  for (std::size_t x = 0; x < L.size(); ++x)
    if (!L.leq(j, x)) acc = join(L, acc, x);
  if (L.leq(j, acc)) throw NotALattice("no largest element avoiding the join irreducible");
  return acc;
}

ColoredLattice dual(const ColoredLattice& L) {
  std::vector<Edge> edges;
  edges.reserve(L.edges().size());
  for (const auto& e : L.edges()) edges.push_back({e.to, e.from, e.color});
  return ColoredLattice::from_edges(L.names(), std::move(edges));
}

ColoredLattice recolor(const ColoredLattice& L, const std::map<int, int>& sigma) {
  std::vector<Edge> edges;
  edges.reserve(L.edges().size());
  for (const auto& e : L.edges()) {
    auto it = sigma.find(e.color);
    if (it == sigma.end()) throw InvalidInput("recolor: color " + std::to_string(e.color) + " unmapped");
    edges.push_back({e.from, e.to, it->second});
  }
  return ColoredLattice::from_edges(L.names(), std::move(edges));
}

ColoredLattice rename(const ColoredLattice& L, std::vector<std::string> names) {
  if (names.size() != L.size()) throw InvalidInput("rename: wrong number of names");
  return ColoredLattice::from_edges(std::move(names), L.edges());
}

std::size_t product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords) {
  std::size_t idx = 0;
  for (std::size_t q = 0; q < sizes.size(); ++q) idx = idx * sizes[q] + coords[q];
  return idx;
}

std::vector<std::size_t> product_coords(std::span<const std::size_t> sizes, std::size_t index) {
  std::vector<std::size_t> c(sizes.size());
  for (std::size_t q = sizes.size(); q-- > 0;) {
    c[q] = index % sizes[q];
    index /= sizes[q];
  }
  return c;
}

ColoredLattice product(std::span<const ColoredLattice> factors) {
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (const auto& f : factors) {
    sizes.push_back(f.size());
    total *= f.size();
  }
  std::vector<std::string> names(total);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < total; ++i) {
    auto c = product_coords(sizes, i);
    std::string nm = "(";
    for (std::size_t q = 0; q < c.size(); ++q) {
      if (q) nm += ",";
      nm += factors[q].name(c[q]);
    }
    names[i] = nm + ")";
    for (std::size_t q = 0; q < c.size(); ++q)
      for (const auto& nb : factors[q].up(c[q])) {
        auto d = c;
        d[q] = nb.vertex;
        edges.push_back({i, product_index(sizes, d), nb.color});
      }
  }
  return ColoredLattice::from_edges(std::move(names), std::move(edges));
}

PathRecord make_path(const ColoredLattice& L, std::vector<std::size_t> vertices) {
  PathRecord p;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto a = vertices[i], b = vertices[i + 1];
    if (auto c = L.edge_color(a, b)) p.steps.push_back({*c, Direction::up});
    else if (auto c2 = L.edge_color(b, a)) p.steps.push_back({*c2, Direction::down});
    else throw InvalidInput("make_path: " + L.name(a) + " and " + L.name(b) + " are not adjacent");
  }
  p.vertices = std::move(vertices);
  return p;
}

bool is_simple(const PathRecord& p) {
  auto v = p.vertices;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_mountain(const PathRecord& p) {
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i)
    if (p.steps[i].dir == Direction::down && p.steps[i + 1].dir == Direction::up) return false;
  return true;
}

bool is_valley(const PathRecord& p) {
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i)
    if (p.steps[i].dir == Direction::up && p.steps[i + 1].dir == Direction::down) return false;
  return true;
}

namespace {

// Least-j rewriting. `peak` selects valleyize (replace peaks) vs mountainize (replace valleys).
PathRecord flatten(const ColoredLattice& L, const PathRecord& p, bool peak) {
  if (!is_simple(p)) throw InvalidInput("path is not simple");
  auto verts = p.vertices;
  const Direction first = peak ? Direction::up : Direction::down;
  while (true) {
    auto cur = make_path(L, verts);
    std::optional<std::size_t> j;
    for (std::size_t i = 0; i + 1 < cur.steps.size(); ++i)
      if (cur.steps[i].dir == first && cur.steps[i + 1].dir != first) { j = i + 1; break; }
    if (!j) return cur;
    auto a = verts[*j - 1], b = verts[*j + 1];
    if (a == b)
      throw DegeneratePath("path doubles back through " + L.name(verts[*j]) + " at step " + std::to_string(*j));
    std::size_t repl = 0;
    auto n = peak ? common_down(L, a, b, &repl) : common_up(L, a, b, &repl);
    if (n != 1)
      throw NotALattice("no unique diamond completion at " + L.name(a) + ", " + L.name(b));
    verts[*j] = repl;
  }
}

}  // namespace

PathRecord mountainize(const ColoredLattice& L, const PathRecord& p) { return flatten(L, p, false); }
PathRecord valleyize(const ColoredLattice& L, const PathRecord& p) { return flatten(L, p, true); }

PathStats path_stats(const PathRecord& p) {
  PathStats s;
  s.length = p.steps.size();
  for (const auto& st : p.steps) ++(st.dir == Direction::up ? s.ascents : s.descents)[st.color];
  return s;
}

namespace {

Bits to_bits(const ColoredLattice& L, std::span<const std::size_t> K) {
  Bits in(L.size());
  for (auto v : K) {
    if (v >= L.size()) throw InvalidInput("subset vertex out of range");
    in.set(v);
  }
  return in;
}

}  // namespace

bool check_full_length_sublattice(const ColoredLattice& L, std::span<const std::size_t> K) {
  Bits in = to_bits(L, K);
  const auto lo = min_element(L), hi = max_element(L);
  if (!in.test(lo) || !in.test(hi)) return false;
  for (auto x : K)
    for (auto y : K)
      if (!in.test(meet(L, x, y)) || !in.test(join(L, x, y))) return false;
  // saturated chain of L-covers from min to max staying in K
  Bits reached(L.size());
  std::deque<std::size_t> queue{lo};
  reached.set(lo);
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& nb : L.up(v))
      if (in.test(nb.vertex) && !reached.test(nb.vertex)) {
        reached.set(nb.vertex);
        queue.push_back(nb.vertex);
      }
  }
  return reached.test(hi);
}

ColoredLattice induced_sublattice(const ColoredLattice& L, std::span<const std::size_t> K) {
  std::vector<std::size_t> ks(K.begin(), K.end());
  std::vector<std::string> names;
  for (auto v : ks) names.push_back(L.name(v));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < ks.size(); ++a)
    for (std::size_t b = 0; b < ks.size(); ++b) {
      if (a == b || !L.leq(ks[a], ks[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < ks.size() && cover; ++c)
        if (c != a && c != b && L.leq(ks[a], ks[c]) && L.leq(ks[c], ks[b])) cover = false;
      if (!cover) continue;
      auto col = L.edge_color(ks[a], ks[b]);
      if (!col)
        throw InvalidInput("induced cover " + L.name(ks[a]) + " < " + L.name(ks[b]) + " is not an edge");
      edges.push_back({a, b, *col});
    }
  return ColoredLattice::from_edges(std::move(names), std::move(edges));
}

std::size_t full_length_witness(const ColoredLattice& L, std::span<const std::size_t> K, std::size_t x) {
  std::vector<std::size_t> over;
  for (auto y : K)
    if (L.leq(x, y)) over.push_back(y);
  std::vector<std::size_t> minimal;
  for (auto y : over) {
    bool is_min = true;
    for (auto z : over)
      if (z != y && L.leq(z, y)) { is_min = false; break; }
    if (is_min) minimal.push_back(y);
  }
  if (minimal.size() != 1)
    throw NotALattice("full_length_witness: " + std::to_string(minimal.size()) + " minimal elements above " + L.name(x));
  return minimal.front();
}

}  // namespace dlat
