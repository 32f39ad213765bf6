#include "dlat/solver.hpp"

#include <algorithm>
#include <optional>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/isomorphism.hpp"

namespace dlat {

ColorMultiset::ColorMultiset(const std::map<int, int>& counts) {
  for (auto [c, n] : counts) add(c, n);
}

ColorMultiset ColorMultiset::from_coefficients(const std::vector<int>& c) {
  ColorMultiset m;
  for (std::size_t i = 0; i < c.size(); ++i) m.add(static_cast<int>(i) + 1, c[i]);
  return m;
}

int ColorMultiset::count(int color) const {
  auto it = counts_.find(color);
  return it == counts_.end() ? 0 : it->second;
}

int ColorMultiset::size() const {
  int n = 0;
  for (auto [c, m] : counts_) n += m;
  return n;
}

void ColorMultiset::add(int color, int times) {
  if (times < 0) throw InvalidInput("negative multiplicity");
  if (times == 0) return;
  counts_[color] += times;
}

std::string ColorMultiset::str() const {
  std::string s = "{";
  bool first = true;
  for (auto [c, n] : counts_)
    for (int i = 0; i < n; ++i) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    }
  return s + "}";
}

namespace {

template <class F>
ColorMultiset combine(const ColorMultiset& a, const ColorMultiset& b, F f) {
  std::map<int, int> out;
  for (auto [c, n] : a.counts()) out[c] = f(n, b.count(c));
  for (auto [c, n] : b.counts())
    if (!out.count(c)) out[c] = f(0, n);
  std::map<int, int> kept;
  for (auto [c, n] : out)
    if (n > 0) kept[c] = n;
  return ColorMultiset(kept);
}

}  // namespace

ColorMultiset multiset_union(const ColorMultiset& a, const ColorMultiset& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}
ColorMultiset multiset_intersection(const ColorMultiset& a, const ColorMultiset& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}
ColorMultiset multiset_difference(const ColorMultiset& a, const ColorMultiset& b) {
  return combine(a, b, [](int x, int y) { return std::max(0, x - y); });
}
ColorMultiset multiset_sum(const ColorMultiset& a, const ColorMultiset& b) {
  return combine(a, b, [](int x, int y) { return x + y; });
}

ColorMultiset color_census(const VertexColoredPoset& P, const std::vector<std::size_t>& vertices) {
  ColorMultiset m;
  for (auto v : vertices) m.add(P.color(v));
  return m;
}

namespace {

std::vector<std::size_t> set_diff(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Walk from `start` to `goal` (goal contains start when growing, is contained when shrinking),
// one vertex at a time; pick the smallest color, then the smallest vertex index.
std::vector<OrderIdeal> ideal_walk(const VertexColoredPoset& P, const OrderIdeal& start, const OrderIdeal& goal,
                                   bool grow) {
  std::vector<OrderIdeal> seq{start};
  std::vector<char> in(P.size(), 0);
  for (auto v : start.members) in[v] = 1;
  auto pending = grow ? set_diff(goal.members, start.members) : set_diff(start.members, goal.members);
  while (!pending.empty()) {
    std::optional<std::size_t> pick;
    for (auto v : pending) {
      bool ok = true;
      for (auto u : grow ? P.lower_covers(v) : P.upper_covers(v))
        if (in[u] != grow) { ok = false; break; }
      if (ok && (!pick || P.color(v) < P.color(*pick))) pick = v;
    }
    if (!pick) throw VerificationFailure("ideal walk stalled");
    in[*pick] = grow;
    pending.erase(std::find(pending.begin(), pending.end(), *pick));
    OrderIdeal next;
    for (std::size_t v = 0; v < P.size(); ++v)
      if (in[v]) next.members.push_back(v);
    seq.push_back(std::move(next));
  }
  return seq;
}

}  // namespace

GameSolution solve_distributive(const VertexColoredPoset& P, const SubsetLattice& L, std::size_t s,
                                std::size_t t, Via via) {
  if (s >= L.elements.size() || t >= L.elements.size()) throw InvalidInput("element outside the lattice");
  const auto& x = L.elements[s];
  const auto& y = L.elements[t];
  OrderIdeal mid;
  if (via == Via::join)
    std::set_union(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
                   std::back_inserter(mid.members));
  else
    std::set_intersection(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
                          std::back_inserter(mid.members));
  const bool grow = via == Via::join;

  auto first = ideal_walk(P, x, mid, grow);
  auto second = ideal_walk(P, y, mid, grow);
  std::vector<std::size_t> verts;
  for (const auto& z : first) verts.push_back(L.index_of(z));
  for (auto it = second.rbegin() + 1; it != second.rend(); ++it) verts.push_back(L.index_of(*it));

  GameSolution sol;
  auto a = grow ? set_diff(mid.members, x.members) : set_diff(x.members, mid.members);
  auto b = grow ? set_diff(mid.members, y.members) : set_diff(y.members, mid.members);
  sol.per_color = multiset_sum(color_census(P, a), color_census(P, b));
  sol.distance = static_cast<int>(a.size() + b.size());
  sol.path = make_path(L.lattice, std::move(verts));
  sol.waypoint = L.index_of(mid);
  return sol;
}

namespace {

DiagonalCoords shifted(const DiagonalCoords& d, const MoveVector& b, int sign) {
  DiagonalCoords e = d;
  for (std::size_t i = 0; i < e.values.size(); ++i) e.values[i] += sign * b.delta[i];
  return e;
}

// Spend the moves in `todo` from d; at each step the smallest color whose move stays valid.
std::vector<std::pair<DiagonalCoords, int>> greedy(const BoxSpec& spec, DiagonalCoords d, ColorMultiset todo,
                                                   int sign) {
  std::vector<std::pair<DiagonalCoords, int>> seq;
  while (!todo.empty()) {
    bool moved = false;
    for (auto [c, n] : todo.counts()) {
      auto e = shifted(d, beta_diag(spec, c), sign);
      if (!is_valid(spec, e)) continue;
      d = e;
      seq.emplace_back(d, c);
      todo = multiset_difference(todo, ColorMultiset(std::map<int, int>{{c, 1}}));
      moved = true;
      break;
    }
    if (!moved) throw VerificationFailure("greedy domino walk stalled at " + format(d) + " with " + todo.str() + " left");
  }
  return seq;
}

}  // namespace

DominoSolution solve_domino(const BoxSpec& spec, const Partition& from, const Partition& to, Via via) {
  require_valid(spec, from);
  require_valid(spec, to);
  const auto ds = partition_to_diagonal(spec, from);
  const auto dt = partition_to_diagonal(spec, to);
  DominoSolution sol;
  sol.from_moves = ColorMultiset::from_coefficients(decompose(spec, ds));
  sol.to_moves = ColorMultiset::from_coefficients(decompose(spec, dt));

  const bool up = via == Via::join;
  auto mid = up ? multiset_union(sol.from_moves, sol.to_moves) : multiset_intersection(sol.from_moves, sol.to_moves);
  auto a = up ? multiset_difference(mid, sol.from_moves) : multiset_difference(sol.from_moves, mid);
  auto b = up ? multiset_difference(mid, sol.to_moves) : multiset_difference(sol.to_moves, mid);
  const int sign = up ? 1 : -1;
  auto left = greedy(spec, ds, a, sign);
  auto right = greedy(spec, dt, b, sign);

  auto top_l = left.empty() ? ds : left.back().first;
  auto top_r = right.empty() ? dt : right.back().first;
  if (top_l != top_r || ColorMultiset::from_coefficients(decompose(spec, top_l)) != mid)
    throw VerificationFailure("greedy walks did not meet at the expected " + std::string(up ? "join" : "meet"));

  const Direction fwd = up ? Direction::up : Direction::down;
  const Direction back = up ? Direction::down : Direction::up;
  sol.shapes.push_back(from);
  for (const auto& [d, c] : left) {
    sol.shapes.push_back(diagonal_to_partition(spec, d));
    sol.steps.push_back({c, fwd});
  }
  for (std::size_t i = right.size(); i-- > 0;) {
    sol.shapes.push_back(i ? diagonal_to_partition(spec, right[i - 1].first) : to);
    sol.steps.push_back({right[i].second, back});
  }
  for (std::size_t i = 0; i + 1 < sol.shapes.size(); ++i)
    if (!is_legal_domino_move(spec, sol.shapes[i], sol.shapes[i + 1]))
      throw VerificationFailure("step " + format(sol.shapes[i]) + " -> " + format(sol.shapes[i + 1]) + " is not a domino move");

  sol.waypoint = diagonal_to_partition(spec, top_l);
  sol.per_color = multiset_sum(a, b);
  sol.distance = a.size() + b.size();
  return sol;
}

}  // namespace dlat
