#include "dlat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <tuple>

#include "dlat/error.hpp"

namespace dlat::oracle {

namespace {

std::vector<std::vector<std::size_t>> neighbours(const ColoredLattice& G, bool undirected) {
  std::vector<std::vector<std::size_t>> adj(G.size());
  for (const auto& e : G.edges()) {
    adj[e.from].push_back(e.to);
    if (undirected) adj[e.to].push_back(e.from);
  }
  return adj;
}

std::vector<int> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<std::size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

// reach[x][y] = 1 iff x <= y, by DFS on raw up-edges
std::vector<std::vector<char>> reachability(const ColoredLattice& L) {
  auto adj = neighbours(L, false);
  const auto n = L.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> stack{x};
    reach[x][x] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!reach[x][w]) {
          reach[x][w] = 1;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

}  // namespace

DistanceTable bfs_all_pairs(const ColoredLattice& G, bool undirected) {
  auto adj = neighbours(G, undirected);
  DistanceTable t{G.size(), std::vector<int>(G.size() * G.size(), -1)};
  for (std::size_t s = 0; s < G.size(); ++s) {
    auto dist = bfs(adj, s);
    for (std::size_t v = 0; v < G.size(); ++v) {
      if (undirected && dist[v] < 0) throw InvalidInput("bfs_all_pairs: graph is disconnected");
      t.d[s * t.n + v] = dist[v];
    }
  }
  return t;
}

std::vector<PathRecord> enumerate_shortest_paths(const ColoredLattice& G, std::size_t s, std::size_t t,
                                                 std::size_t cap) {
  if (s >= G.size() || t >= G.size()) throw InvalidInput("enumerate_shortest_paths: vertex out of range");
  // (neighbour, color, direction) lists
  struct Arc {
    std::size_t to;
    int color;
    Direction dir;
  };
  std::vector<std::vector<Arc>> arcs(G.size());
  for (const auto& e : G.edges()) {
    arcs[e.from].push_back({e.to, e.color, Direction::up});
    arcs[e.to].push_back({e.from, e.color, Direction::down});
  }
  std::vector<std::vector<std::size_t>> adj(G.size());
  for (std::size_t v = 0; v < G.size(); ++v)
    for (const auto& a : arcs[v]) adj[v].push_back(a.to);
  auto dist = bfs(adj, t);
  if (dist[s] < 0) return {};

  std::vector<PathRecord> out;
  PathRecord cur{{s}, {}};
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == t) {
      if (out.size() == cap) throw CapExceeded("more than " + std::to_string(cap) + " shortest paths");
      out.push_back(cur);
      return;
    }
    for (const auto& a : arcs[v]) {
      if (dist[a.to] != dist[v] - 1) continue;
      cur.vertices.push_back(a.to);
      cur.steps.push_back({a.color, a.dir});
      self(self, a.to);
      cur.vertices.pop_back();
      cur.steps.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

bool check_constructed_iso(const ColoredLattice& G, const ColoredLattice& H, const std::vector<std::size_t>& f) {
  if (f.size() != G.size() || G.size() != H.size()) return false;
  std::vector<char> hit(H.size(), 0);
  for (auto y : f) {
    if (y >= H.size() || hit[y]) return false;
    hit[y] = 1;
  }
  if (G.edges().size() != H.edges().size()) return false;
  std::vector<std::tuple<std::size_t, std::size_t, int>> a, b;
  for (const auto& e : G.edges()) a.emplace_back(f[e.from], f[e.to], e.color);
  for (const auto& e : H.edges()) b.emplace_back(e.from, e.to, e.color);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool check_poset_iso(const VertexColoredPoset& P, const VertexColoredPoset& Q, const std::vector<std::size_t>& f) {
  if (f.size() != P.size() || P.size() != Q.size()) return false;
  std::vector<char> hit(Q.size(), 0);
  for (std::size_t v = 0; v < P.size(); ++v) {
    if (f[v] >= Q.size() || hit[f[v]]) return false;
    hit[f[v]] = 1;
    if (P.color(v) != Q.color(f[v])) return false;
  }
  // covers determine the order; compare cover sets through f
  std::vector<std::pair<std::size_t, std::size_t>> a, b;
  for (auto [x, y] : P.covers()) a.emplace_back(f[x], f[y]);
  b = Q.covers();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

LatticeLawReport check_lattice_laws(const ColoredLattice& L) {
  LatticeLawReport rep;
  const auto n = L.size();
  if (n == 0) return rep;
  auto reach = reachability(L);
  auto le = [&](std::size_t x, std::size_t y) { return reach[x][y] != 0; };

  // |down-set| and |up-set| are strictly monotone, so the only possible greatest lower
  // bound is the candidate with the largest down-set; then confirm it.
  std::vector<std::size_t> downs(n, 0), ups(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le(x, y)) {
        ++downs[y];
        ++ups[x];
      }
  std::vector<std::size_t> M(n * n), J(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<std::size_t> m, j;
      for (std::size_t z = 0; z < n; ++z) {
        if (le(z, x) && le(z, y) && (!m || downs[z] > downs[*m])) m = z;
        if (le(x, z) && le(y, z) && (!j || ups[z] > ups[*j])) j = z;
      }
      if (!m || !j) return rep;
      for (std::size_t w = 0; w < n; ++w) {
        if (le(w, x) && le(w, y) && !le(w, *m)) return rep;
        if (le(x, w) && le(y, w) && !le(*j, w)) return rep;
      }
      M[x * n + y] = *m;
      J[x * n + y] = *j;
    }
  rep.lattice = true;
  auto meet = [&](std::size_t a, std::size_t b) { return M[a * n + b]; };
  auto join = [&](std::size_t a, std::size_t b) { return J[a * n + b]; };

  rep.modular = rep.distributive = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (rep.modular && le(x, b) && join(x, meet(a, b)) != meet(join(x, a), b)) rep.modular = false;
        if (rep.distributive && meet(x, join(a, b)) != join(meet(x, a), meet(x, b))) rep.distributive = false;
      }

  // rank by BFS from the bottom, checked edge by edge
  std::size_t bottom = 0;
  for (std::size_t z = 0; z < n; ++z)
    if (le(z, bottom)) bottom = z;
  auto dist = bfs(neighbours(L, true), bottom);
  rep.rank_identity = true;
  for (const auto& e : L.edges())
    if (dist[e.to] != dist[e.from] + 1) rep.rank_identity = false;
  for (std::size_t s = 0; s < n && rep.rank_identity; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (2 * dist[join(s, t)] - dist[s] - dist[t] != dist[s] + dist[t] - 2 * dist[meet(s, t)]) {
        rep.rank_identity = false;
        break;
      }
  return rep;
}

VertexColoredPoset random_poset(std::mt19937_64& rng, std::size_t max_vertices, int max_color) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_vertices);
  std::uniform_int_distribution<int> color_dist(1, max_color);
  std::bernoulli_distribution coin(0.35);
  const auto n = size_dist(rng);
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lt[i][j] = coin(rng);
  // transitive closure, then keep only covers
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  std::vector<std::string> ids;
  std::vector<int> colors;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("v" + std::to_string(i));
    colors.push_back(color_dist(rng));
  }
  return VertexColoredPoset::create(std::move(ids), std::move(colors), std::move(covers));
}

}  // namespace dlat::oracle
