#include "dlat/domino.hpp"

#include <algorithm>
#include <set>

#include "dlat/error.hpp"

namespace dlat {

namespace {

void require_color(const BoxSpec& spec, int l) {
  if (l < 1 || l > spec.N - 1)
    throw InvalidInput("color " + std::to_string(l) + " outside 1.." + std::to_string(spec.N - 1));
}

std::vector<int> unit(int n, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<int> v(n, 0);
  for (auto [i, x] : entries) v.at(i - 1) += x;
  return v;
}

}  // namespace

bool is_red(const BoxSpec& spec, int r, int c) {
  if (r < 1 || r > spec.k || c < 1 || c > spec.width())
    throw InvalidInput("cell (" + std::to_string(r) + "," + std::to_string(c) + ") is off the board");
  return (r + c) % 2 == (1 + spec.width()) % 2;
}

MoveVector beta_diag(const BoxSpec& spec, int l) {
  require_color(spec, l);
  const int N = spec.N, h = N / 2, n = N - 1;
  MoveVector m{l, {}, Space::diag};
  if (N % 2 == 0) {
    if (l < h) m.delta = unit(n, {{N - 2 * l, -1}, {N - 2 * l + 1, -1}});
    else if (l == h) m.delta = unit(n, {{1, -1}});
    else m.delta = unit(n, {{2 * l - N, 1}, {2 * l - N - 1, 1}});
  } else {
    if (l < h) m.delta = unit(n, {{N - 2 * l, -1}, {N - 2 * l - 1, -1}});
    else if (l == h) m.delta = unit(n, {{1, -1}});
    else m.delta = unit(n, {{2 * l - N, 1}, {2 * l - N + 1, 1}});
  }
  return m;
}

std::optional<std::pair<Partition, MoveVector>> beta_part(const BoxSpec& spec, const Partition& s, int l) {
  require_valid(spec, s);
  require_color(spec, l);
  const int N = spec.N, k = spec.k, h = N / 2;
  const auto& p = s.parts;
  auto sg = [&](int j) { return p[j - 1]; };

  std::vector<std::vector<int>> found;
  auto consider = [&](std::vector<int> delta) {
    Partition t = s;
    for (int i = 0; i < k; ++i) t.parts[i] += delta[i];
    if (is_valid(spec, t)) found.push_back(std::move(delta));
  };

  // horizontal: +-2e_j when s_j - j == a; vertical: +-(e_j + e_{j+1}) when s_{j+1} - j == b
  // and rows j, j+1 end in the same column (the two cells must touch).
  auto branches = [&](int sign, int a, int b) {
    for (int j = 1; j <= k; ++j)
      if (sg(j) - j == a) consider(unit(k, {{j, 2 * sign}}));
    for (int j = 1; j < k; ++j)
      if (sg(j + 1) - j == b && sg(j) == sg(j + 1)) consider(unit(k, {{j, sign}, {j + 1, sign}}));
  };

  if (l == h) {
    if (sg(1) == N - k) consider(unit(k, {{1, -1}}));
  } else if (N % 2 == 0) {
    if (l < h) branches(-1, 2 * l - k, 2 * l - k);
    else branches(+1, 2 * N - k - 2 * l - 1, 2 * N - k - 2 * l);
  } else {
    if (l < h) branches(-1, 2 * l - k + 1, 2 * l - k + 1);
    else branches(+1, 2 * N - k - 2 * l - 2, 2 * N - k - 2 * l - 1);
  }

  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw VerificationFailure("two color-" + std::to_string(l) + " moves out of " + format(s));
  Partition t = s;
  for (int i = 0; i < k; ++i) t.parts[i] += found.front()[i];
  return std::make_pair(t, MoveVector{l, found.front(), Space::part});
}

std::pair<int, int> d_tableau_swap(const BoxSpec& spec, int l) {
  require_color(spec, l);
  const int N = spec.N, h = N / 2;
  if (N % 2 == 0) {
    if (l < h) return {2 * l - 1, 2 * l + 1};
    if (l == h) return {N - 1, N};
    return {2 * N - 2 * l + 2, 2 * N - 2 * l};
  }
  if (l < h) return {2 * l, 2 * l + 2};
  if (l == h) return {2 * l, 2 * l + 1};
  return {2 * N - 2 * l + 1, 2 * N - 2 * l - 1};
}

MoveVector beta_circ(const BoxSpec& spec, int l) {
  auto [x, y] = d_tableau_swap(spec, l);
  return {l, unit(spec.N, {{x, 1}, {y, -1}}), Space::circ};
}

std::vector<UpEdge<Partition>> d_up_edges(const BoxSpec& spec, const Partition& s) {
  std::vector<UpEdge<Partition>> out;
  for (int l = 1; l < spec.N; ++l)
    if (auto m = beta_part(spec, s, l)) out.push_back({m->first, l});
  return out;
}

std::vector<UpEdge<CircleState>> d_up_edges(const BoxSpec& spec, const CircleState& c) {
  if (c.scheme != Scheme::D || !is_valid(spec, c)) throw InvalidInput("expected a D-scheme circle state");
  std::vector<UpEdge<CircleState>> out;
  for (int l = 1; l < spec.N; ++l) {
    auto b = beta_circ(spec, l);
    CircleState t = c;
    bool ok = true;
    for (int i = 0; i < spec.N; ++i) {
      t.bits[i] += b.delta[i];
      if (t.bits[i] < 0 || t.bits[i] > 1) ok = false;
    }
    if (ok) out.push_back({t, l});
  }
  return out;
}

std::vector<UpEdge<DiagonalCoords>> d_up_edges(const BoxSpec& spec, const DiagonalCoords& d) {
  if (!is_valid(spec, d)) throw InvalidInput("not a valid diagonal sequence");
  std::vector<UpEdge<DiagonalCoords>> out;
  for (int l = 1; l < spec.N; ++l) {
    auto b = beta_diag(spec, l);
    DiagonalCoords e = d;
    for (int i = 0; i < spec.N - 1; ++i) e.values[i] += b.delta[i];
    if (is_valid(spec, e)) out.push_back({e, l});
  }
  return out;
}

ColoredLattice build_d_a(const BoxSpec& spec) {
  auto shapes = all_partitions(spec);
  std::vector<std::string> names;
  for (const auto& s : shapes) names.push_back(format(s));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (const auto& e : d_up_edges(spec, shapes[i])) {
      auto j = std::lower_bound(shapes.begin(), shapes.end(), e.to) - shapes.begin();
      edges.push_back({i, static_cast<std::size_t>(j), e.color});
    }
  return ColoredLattice::from_edges(std::move(names), std::move(edges));
}

bool is_legal_domino_move(const BoxSpec& spec, const Partition& a, const Partition& b) {
  require_valid(spec, a);
  require_valid(spec, b);
  std::vector<std::pair<int, int>> diff;
  for (int r = 1; r <= spec.k; ++r) {
    int lo = std::min(a.parts[r - 1], b.parts[r - 1]);
    int hi = std::max(a.parts[r - 1], b.parts[r - 1]);
    for (int c = lo + 1; c <= hi; ++c) diff.emplace_back(r, c);
  }
  if (diff.size() == 1) return diff[0] == std::make_pair(1, spec.width());
  if (diff.size() != 2) return false;
  auto [r1, c1] = diff[0];
  auto [r2, c2] = diff[1];
  return std::abs(r1 - r2) + std::abs(c1 - c2) == 1;
}

Tableau gamma_pt(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  Tableau t{{}, Order::decreasing};
  for (int j = 1; j <= spec.k; ++j) t.entries.push_back(s.parts[j - 1] + spec.k - j + 1);
  return t;
}

Partition gamma_tp(const BoxSpec& spec, const Tableau& t) {
  if (t.order != Order::decreasing || !is_valid(spec, t))
    throw InvalidInput("expected a strictly decreasing " + std::to_string(spec.k) + "-subset of 1.." +
                       std::to_string(spec.N));
  Partition s;
  for (int j = 1; j <= spec.k; ++j) s.parts.push_back(t.entries[j - 1] - spec.k + j - 1);
  require_valid(spec, s);
  return s;
}

CircleState gamma_tc(const BoxSpec& spec, const Tableau& t) {
  if (t.order != Order::decreasing) throw InvalidInput("expected a D tableau");
  return tableau_to_circle(spec, t);
}

Tableau gamma_ct(const BoxSpec& spec, const CircleState& c) {
  if (c.scheme != Scheme::D) throw InvalidInput("expected a D-scheme circle state");
  return circle_to_tableau(spec, c);
}

namespace {

Partition extreme(const BoxSpec& spec, bool want_min) {
  auto shapes = all_partitions(spec);
  std::set<Partition> has_up, has_down;
  for (const auto& s : shapes)
    for (const auto& e : d_up_edges(spec, s)) {
      has_up.insert(s);
      has_down.insert(e.to);
    }
  std::vector<Partition> hits;
  for (const auto& s : shapes)
    if (!(want_min ? has_down : has_up).count(s)) hits.push_back(s);
  if (hits.size() != 1)
    throw VerificationFailure("domino digraph has " + std::to_string(hits.size()) +
                              (want_min ? " sources" : " sinks"));
  return hits.front();
}

Partition staircase(const BoxSpec& spec, int extra) {
  Partition s;
  for (int i = 1; i <= spec.k; ++i) s.parts.push_back(std::max(0, std::min(spec.k - i + extra, spec.width())));
  return s;
}

}  // namespace

Partition d_min(const BoxSpec& spec) { return extreme(spec, true); }
Partition d_max(const BoxSpec& spec) { return extreme(spec, false); }
DiagonalCoords m_diag(const BoxSpec& spec) { return partition_to_diagonal(spec, d_min(spec)); }

Partition staircase_short(const BoxSpec& spec) { return staircase(spec, 0); }
Partition staircase_long(const BoxSpec& spec) { return staircase(spec, 1); }

std::string render_shape(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  std::string out;
  for (int r = 1; r <= spec.k; ++r) {
    for (int c = 1; c <= spec.width(); ++c) {
      bool shaded = c <= s.parts[r - 1];
      bool corner = r == 1 && c == spec.width();
      out += corner ? (shaded ? '@' : 'o') : (shaded ? '#' : '.');
    }
    out += '\n';
  }
  return out;
}

std::string render_board(const BoxSpec& spec) {
  std::string out;
  for (int r = 1; r <= spec.k; ++r) {
    for (int c = 1; c <= spec.width(); ++c) out += is_red(spec, r, c) ? 'R' : 'W';
    out += '\n';
  }
  return out;
}

}  // namespace dlat
