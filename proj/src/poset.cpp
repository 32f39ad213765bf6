#include "dlat/poset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "dlat/error.hpp"

namespace dlat {

struct VertexColoredPoset::Impl {
  std::vector<std::string> ids;
  std::vector<int> colors;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::vector<std::size_t>> lower;
  std::vector<std::vector<std::size_t>> upper;
  std::vector<Bits> below;
};

VertexColoredPoset::VertexColoredPoset() : impl_(std::make_shared<Impl>()) {}

VertexColoredPoset VertexColoredPoset::create(std::vector<std::string> ids, std::vector<int> colors,
                                              std::vector<std::pair<std::size_t, std::size_t>> covers) {
  const std::size_t n = ids.size();
  if (colors.size() != n) throw InvalidInput("poset: every vertex needs a color");
  auto impl = std::make_shared<Impl>();
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] <= 0) throw InvalidInput("poset: color of '" + ids[v] + "' must be positive");
    if (!impl->index.emplace(ids[v], v).second) throw InvalidInput("poset: duplicate id '" + ids[v] + "'");
  }
  impl->lower.resize(n);
  impl->upper.resize(n);
  std::sort(covers.begin(), covers.end());
  if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
    throw InvalidInput("poset: repeated cover pair");
  for (auto [x, y] : covers) {
    if (x >= n || y >= n) throw InvalidInput("poset: cover endpoint out of range");
    if (x == y) throw InvalidInput("poset: reflexive cover at '" + ids[x] + "'");
    impl->lower[y].push_back(x);
    impl->upper[x].push_back(y);
  }

  std::vector<std::size_t> indeg(n), order;
  for (std::size_t v = 0; v < n; ++v) indeg[v] = impl->lower[v].size();
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (!indeg[v]) ready.push_back(v);
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto w : impl->upper[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw InvalidInput("poset: cover relation has a cycle");

  impl->below.assign(n, Bits(n));
  for (auto v : order) {
    impl->below[v].set(v);
    for (auto u : impl->lower[v]) impl->below[v] |= impl->below[u];
  }
  for (auto [x, y] : covers)
    for (auto z : impl->lower[y])
      if (z != x && impl->below[z].test(x))
        throw InvalidInput("poset: (" + ids[x] + "," + ids[y] + ") is not a cover");

  impl->ids = std::move(ids);
  impl->colors = std::move(colors);
  impl->covers = std::move(covers);
  VertexColoredPoset P;
  P.impl_ = std::move(impl);
  return P;
}

VertexColoredPoset VertexColoredPoset::create_by_id(
    const std::vector<std::pair<std::string, int>>& vertices,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::string> ids;
  std::vector<int> colors;
  std::unordered_map<std::string, std::size_t> at;
  for (const auto& [id, c] : vertices) {
    at.emplace(id, ids.size());
    ids.push_back(id);
    colors.push_back(c);
  }
  std::vector<std::pair<std::size_t, std::size_t>> cv;
  for (const auto& [a, b] : covers) {
    auto ia = at.find(a), ib = at.find(b);
    if (ia == at.end() || ib == at.end()) throw InvalidInput("poset: cover mentions unknown id");
    cv.emplace_back(ia->second, ib->second);
  }
  return create(std::move(ids), std::move(colors), std::move(cv));
}

std::size_t VertexColoredPoset::size() const { return impl_->ids.size(); }
const std::string& VertexColoredPoset::id(std::size_t v) const { return impl_->ids.at(v); }
int VertexColoredPoset::color(std::size_t v) const { return impl_->colors.at(v); }

std::optional<std::size_t> VertexColoredPoset::find(std::string_view id) const {
  auto it = impl_->index.find(std::string(id));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t VertexColoredPoset::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) throw InvalidInput("poset: no vertex '" + std::string(id) + "'");
  return *v;
}

const std::vector<std::pair<std::size_t, std::size_t>>& VertexColoredPoset::covers() const {
  return impl_->covers;
}
const std::vector<std::size_t>& VertexColoredPoset::lower_covers(std::size_t v) const { return impl_->lower.at(v); }
const std::vector<std::size_t>& VertexColoredPoset::upper_covers(std::size_t v) const { return impl_->upper.at(v); }
bool VertexColoredPoset::leq(std::size_t x, std::size_t y) const { return impl_->below.at(y).test(x); }

bool is_order_ideal(const VertexColoredPoset& P, const OrderIdeal& x) {
  std::vector<char> in(P.size(), 0);
  for (auto v : x.members) {
    if (v >= P.size()) return false;
    in[v] = 1;
  }
  for (auto v : x.members)
    for (auto u : P.lower_covers(v))
      if (!in[u]) return false;
  return true;
}

bool is_order_filter(const VertexColoredPoset& P, const OrderIdeal& x) {
  std::vector<char> in(P.size(), 0);
  for (auto v : x.members) {
    if (v >= P.size()) return false;
    in[v] = 1;
  }
  for (auto v : x.members)
    for (auto u : P.upper_covers(v))
      if (!in[u]) return false;
  return true;
}

OrderIdeal complement(const VertexColoredPoset& P, const OrderIdeal& x) {
  OrderIdeal out;
  std::size_t i = 0;
  for (std::size_t v = 0; v < P.size(); ++v) {
    if (i < x.members.size() && x.members[i] == v) { ++i; continue; }
    out.members.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::string> sorted_ids(const VertexColoredPoset& P, const OrderIdeal& x) {
  std::vector<std::string> ids;
  for (auto v : x.members) ids.push_back(P.id(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

void sort_by_ids(const VertexColoredPoset& P, std::vector<OrderIdeal>& xs) {
  std::vector<std::pair<std::vector<std::string>, OrderIdeal>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) keyed.emplace_back(sorted_ids(P, x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  xs.clear();
  for (auto& kv : keyed) xs.push_back(std::move(kv.second));
}

// Walk a linear extension; a vertex may join only when its lower covers are in.
void grow(const VertexColoredPoset& P, const std::vector<std::size_t>& order, std::size_t pos,
          std::vector<char>& in, std::vector<OrderIdeal>& out) {
  if (pos == order.size()) {
    OrderIdeal x;
    for (std::size_t v = 0; v < in.size(); ++v)
      if (in[v]) x.members.push_back(v);
    out.push_back(std::move(x));
    return;
  }
  auto v = order[pos];
  grow(P, order, pos + 1, in, out);
  bool ok = true;
  for (auto u : P.lower_covers(v))
    if (!in[u]) { ok = false; break; }
  if (ok) {
    in[v] = 1;
    grow(P, order, pos + 1, in, out);
    in[v] = 0;
  }
}

std::vector<std::size_t> linear_extension(const VertexColoredPoset& P) {
  std::vector<std::size_t> indeg(P.size()), out;
  for (std::size_t v = 0; v < P.size(); ++v) indeg[v] = P.lower_covers(v).size();
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < P.size(); ++v)
    if (!indeg[v]) ready.push_back(v);
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    out.push_back(v);
    for (auto w : P.upper_covers(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return out;
}

}  // namespace

std::string subset_name(const VertexColoredPoset& P, const OrderIdeal& x) {
  std::string s = "{";
  bool first = true;
  for (const auto& id : sorted_ids(P, x)) {
    if (!first) s += ",";
    s += id;
    first = false;
  }
  return s + "}";
}

std::vector<OrderIdeal> enumerate_order_ideals(const VertexColoredPoset& P) {
  std::vector<OrderIdeal> out;
  std::vector<char> in(P.size(), 0);
  grow(P, linear_extension(P), 0, in, out);
  sort_by_ids(P, out);
  return out;
}

std::vector<OrderIdeal> enumerate_order_filters(const VertexColoredPoset& P) {
  std::vector<OrderIdeal> out;
  for (const auto& x : enumerate_order_ideals(P)) out.push_back(complement(P, x));
  sort_by_ids(P, out);
  return out;
}

std::size_t SubsetLattice::index_of(const OrderIdeal& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw InvalidInput("subset is not an element of this lattice");
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

Bits membership(std::size_t n, const OrderIdeal& x) {
  Bits b(n);
  for (auto v : x.members) b.set(v);
  return b;
}

// grow = true: edges x -> x + {v}; grow = false: edges x -> x - {v}.
SubsetLattice subset_lattice(const VertexColoredPoset& P, std::vector<OrderIdeal> elements, bool grow_up) {
  const std::size_t n = P.size();
  std::map<Bits, std::size_t> at;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    at.emplace(membership(n, elements[i]), i);
    names.push_back(subset_name(P, elements[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Bits b = membership(n, elements[i]);
    for (std::size_t v = 0; v < n; ++v) {
      if (b.test(v) != !grow_up) continue;
      Bits c = b;
      c.flip(v);
      auto it = at.find(c);
      if (it != at.end()) edges.push_back({i, it->second, P.color(v)});
    }
  }
  return {ColoredLattice::from_edges(std::move(names), std::move(edges)), std::move(elements)};
}

}  // namespace

SubsetLattice ideal_lattice(const VertexColoredPoset& P) {
  return subset_lattice(P, enumerate_order_ideals(P), true);
}

SubsetLattice filter_lattice(const VertexColoredPoset& P) {
  return subset_lattice(P, enumerate_order_filters(P), false);
}

ColoredLattice j_lattice(const VertexColoredPoset& P) { return ideal_lattice(P).lattice; }
ColoredLattice m_lattice(const VertexColoredPoset& P) { return filter_lattice(P).lattice; }

namespace {

VertexColoredPoset irreducibles(const ColoredLattice& L, const std::vector<std::size_t>& elems, bool join_side) {
  if (!is_lattice(L)) throw NotALattice("irreducibles: input is not a lattice");
  std::vector<std::string> ids;
  std::vector<int> colors;
  for (auto v : elems) {
    ids.push_back(L.name(v));
    colors.push_back(join_side ? L.down(v).front().color : L.up(v).front().color);
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (a == b || !L.leq(elems[a], elems[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < elems.size() && cover; ++c)
        if (c != a && c != b && L.leq(elems[a], elems[c]) && L.leq(elems[c], elems[b])) cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  return VertexColoredPoset::create(std::move(ids), std::move(colors), std::move(covers));
}

}  // namespace

VertexColoredPoset join_irreducibles(const ColoredLattice& L) {
  return irreducibles(L, join_irreducible_elements(L), true);
}

VertexColoredPoset meet_irreducibles(const ColoredLattice& L) {
  return irreducibles(L, meet_irreducible_elements(L), false);
}

OrderIdeal canonical_iso_to_ideals(const ColoredLattice& L, std::size_t x) {
  if (x >= L.size()) throw InvalidInput("canonical_iso_to_ideals: element not in lattice");
  auto ji = join_irreducible_elements(L);
  OrderIdeal out;
  for (std::size_t i = 0; i < ji.size(); ++i)
    if (L.leq(ji[i], x)) out.members.push_back(i);
  return out;
}

OrderIdeal canonical_iso_to_filters(const ColoredLattice& L, std::size_t x) {
  if (x >= L.size()) throw InvalidInput("canonical_iso_to_filters: element not in lattice");
  auto mi = meet_irreducible_elements(L);
  OrderIdeal out;
  for (std::size_t i = 0; i < mi.size(); ++i)
    if (L.leq(x, mi[i])) out.members.push_back(i);
  return out;
}

namespace {

std::vector<std::string> all_ids(const VertexColoredPoset& P) {
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < P.size(); ++v) ids.push_back(P.id(v));
  return ids;
}

std::vector<int> all_colors(const VertexColoredPoset& P) {
  std::vector<int> c;
  for (std::size_t v = 0; v < P.size(); ++v) c.push_back(P.color(v));
  return c;
}

}  // namespace

VertexColoredPoset dual(const VertexColoredPoset& P) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [x, y] : P.covers()) covers.emplace_back(y, x);
  return VertexColoredPoset::create(all_ids(P), all_colors(P), std::move(covers));
}

VertexColoredPoset recolor(const VertexColoredPoset& P, const std::map<int, int>& sigma) {
  std::vector<int> colors;
  for (std::size_t v = 0; v < P.size(); ++v) {
    auto it = sigma.find(P.color(v));
    if (it == sigma.end()) throw InvalidInput("recolor: color " + std::to_string(P.color(v)) + " unmapped");
    colors.push_back(it->second);
  }
  return VertexColoredPoset::create(all_ids(P), std::move(colors), P.covers());
}

VertexColoredPoset disjoint_sum(const VertexColoredPoset& P, const VertexColoredPoset& Q) {
  std::vector<std::string> ids;
  std::vector<int> colors;
  for (std::size_t v = 0; v < P.size(); ++v) {
    ids.push_back("1:" + P.id(v));
    colors.push_back(P.color(v));
  }
  for (std::size_t v = 0; v < Q.size(); ++v) {
    ids.push_back("2:" + Q.id(v));
    colors.push_back(Q.color(v));
  }
  auto covers = P.covers();
  for (auto [x, y] : Q.covers()) covers.emplace_back(x + P.size(), y + P.size());
  return VertexColoredPoset::create(std::move(ids), std::move(colors), std::move(covers));
}

}  // namespace dlat
