#include "dlat/type_a.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dlat/error.hpp"

namespace dlat {

BoxSpec BoxSpec::make(int k, int N) {
  if (k < 1 || k > N - 1)
    throw InvalidInput("need 1 <= k <= N-1, got k=" + std::to_string(k) + " N=" + std::to_string(N));
  return BoxSpec{k, N};
}

bool is_valid(const BoxSpec& spec, const Partition& s) {
  if (static_cast<int>(s.parts.size()) != spec.k) return false;
  for (int r = 0; r < spec.k; ++r) {
    if (s.parts[r] < 0 || s.parts[r] > spec.width()) return false;
    if (r && s.parts[r] > s.parts[r - 1]) return false;
  }
  return true;
}

void require_valid(const BoxSpec& spec, const Partition& s) {
  if (static_cast<int>(s.parts.size()) != spec.k)
    throw InvalidInput("shape has " + std::to_string(s.parts.size()) + " rows, expected " + std::to_string(spec.k));
  for (int r = 0; r < spec.k; ++r) {
    if (s.parts[r] < 0 || s.parts[r] > spec.width())
      throw InvalidInput("row " + std::to_string(r + 1) + " length " + std::to_string(s.parts[r]) +
                         " outside 0.." + std::to_string(spec.width()));
    if (r && s.parts[r] > s.parts[r - 1])
      throw InvalidInput("row " + std::to_string(r + 1) + " is longer than row " + std::to_string(r));
  }
}

bool is_valid(const BoxSpec& spec, const Tableau& t) {
  if (static_cast<int>(t.entries.size()) != spec.k) return false;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (t.entries[i] < 1 || t.entries[i] > spec.N) return false;
    if (i) {
      bool inc = t.entries[i] > t.entries[i - 1];
      if (inc != (t.order == Order::increasing)) return false;
    }
  }
  return true;
}

bool is_valid(const BoxSpec& spec, const CircleState& c) {
  if (static_cast<int>(c.bits.size()) != spec.N) return false;
  int ones = 0;
  for (int b : c.bits) {
    if (b != 0 && b != 1) return false;
    ones += b;
  }
  return ones == spec.k;
}

bool is_valid(const BoxSpec& spec, const DiagonalCoords& d) {
  const int N = spec.N, k = spec.k, w = spec.width();
  if (static_cast<int>(d.values.size()) != N - 1) return false;
  auto at = [&](int i) { return d.values[i - 1]; };
  for (int i = 1; i <= N - 1; ++i) {
    if (at(i) < 0) return false;
    if (i <= w && at(i) > std::min(i, k)) return false;
    if (i >= w && at(i) > std::min(N - i, w)) return false;
  }
  for (int i = 1; i < N - 1; ++i) {
    int step = at(i + 1) - at(i);
    if (i < w && step != 0 && step != 1) return false;
    if (i >= w && step != 0 && step != -1) return false;
  }
  return true;
}

namespace {

void partitions_rec(const BoxSpec& spec, int row, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == spec.k) {
    out.push_back({cur});
    return;
  }
  for (int v = 0; v <= cap; ++v) {
    cur.push_back(v);
    partitions_rec(spec, row + 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(const BoxSpec& spec) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(spec, 0, spec.width(), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> all_tableaux(const BoxSpec& spec, Order order) {
  std::vector<Tableau> out;
  std::vector<int> mask(spec.N, 0);
  std::fill(mask.begin(), mask.begin() + spec.k, 1);
  do {
    Tableau t{{}, order};
    for (int i = 0; i < spec.N; ++i)
      if (mask[i]) t.entries.push_back(i + 1);
    if (order == Order::decreasing) std::reverse(t.entries.begin(), t.entries.end());
    out.push_back(std::move(t));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

int box_color(const BoxSpec& spec, int r, int c) { return spec.width() + r - c; }

std::size_t p_a_index(const BoxSpec& spec, int r, int c) {
  return static_cast<std::size_t>((r - 1) * spec.width() + (c - 1));
}

VertexColoredPoset build_p_a(const BoxSpec& spec) {
  std::vector<std::string> ids;
  std::vector<int> colors;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int r = 1; r <= spec.k; ++r)
    for (int c = 1; c <= spec.width(); ++c) {
      ids.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
      colors.push_back(box_color(spec, r, c));
      if (c < spec.width()) covers.emplace_back(p_a_index(spec, r, c), p_a_index(spec, r, c + 1));
      if (r < spec.k) covers.emplace_back(p_a_index(spec, r, c), p_a_index(spec, r + 1, c));
    }
  return VertexColoredPoset::create(std::move(ids), std::move(colors), std::move(covers));
}

ColoredLattice build_l_a(const BoxSpec& spec) {
  auto J = ideal_lattice(build_p_a(spec));
  std::vector<std::string> names;
  for (const auto& x : J.elements) names.push_back(format(ideal_to_partition(spec, x)));
  return rename(J.lattice, std::move(names));
}

Partition ideal_to_partition(const BoxSpec& spec, const OrderIdeal& x) {
  Partition s{std::vector<int>(spec.k, 0)};
  const auto n = static_cast<std::size_t>(spec.k * spec.width());
  for (auto v : x.members) {
    if (v >= n) throw InvalidInput("ideal member outside the box");
    ++s.parts[v / spec.width()];
  }
  if (partition_to_ideal(spec, s) != x) throw InvalidInput("subset is not an order ideal of the box poset");
  return s;
}

OrderIdeal partition_to_ideal(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  OrderIdeal x;
  for (int r = 1; r <= spec.k; ++r)
    for (int c = 1; c <= s.parts[r - 1]; ++c) x.members.push_back(p_a_index(spec, r, c));
  return x;
}

Tableau partition_to_tableau_L(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  Tableau t{{}, Order::increasing};
  for (int r = 1; r <= spec.k; ++r) t.entries.push_back(spec.width() + r - s.parts[r - 1]);
  return t;
}

Partition tableau_to_partition_L(const BoxSpec& spec, const Tableau& t) {
  if (t.order != Order::increasing || !is_valid(spec, t))
    throw InvalidInput("expected a strictly increasing " + std::to_string(spec.k) + "-subset of 1.." +
                       std::to_string(spec.N));
  Partition s;
  for (int r = 1; r <= spec.k; ++r) s.parts.push_back(spec.width() + r - t.entries[r - 1]);
  require_valid(spec, s);
  return s;
}

CircleState tableau_to_circle(const BoxSpec& spec, const Tableau& t) {
  if (!is_valid(spec, t)) throw InvalidInput("tableau is not a strictly monotone k-subset");
  CircleState c{std::vector<int>(spec.N, 0), t.order == Order::increasing ? Scheme::L : Scheme::D};
  for (int v : t.entries) c.bits[v - 1] = 1;
  return c;
}

Tableau circle_to_tableau(const BoxSpec& spec, const CircleState& c) {
  if (!is_valid(spec, c))
    throw InvalidInput("circle state must have length " + std::to_string(spec.N) + " and exactly " +
                       std::to_string(spec.k) + " ones");
  Tableau t{{}, c.scheme == Scheme::L ? Order::increasing : Order::decreasing};
  for (int i = 1; i <= spec.N; ++i)
    if (c.bits[i - 1]) t.entries.push_back(i);
  if (t.order == Order::decreasing) std::reverse(t.entries.begin(), t.entries.end());
  return t;
}

DiagonalCoords partition_to_diagonal(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  DiagonalCoords d{std::vector<int>(spec.N - 1, 0)};
  for (int r = 1; r <= spec.k; ++r)
    for (int c = 1; c <= s.parts[r - 1]; ++c) ++d.values[box_color(spec, r, c) - 1];
  return d;
}

Partition diagonal_to_partition(const BoxSpec& spec, const DiagonalCoords& d) {
  if (!is_valid(spec, d)) throw InvalidInput("not a valid diagonal sequence: " + format(d));
  const int w = spec.width();
  auto at = [&](int i) { return d.values[i - 1]; };
  Partition s;
  for (int i = 1; i <= spec.k; ++i) {
    int v = 0;
    for (int j = i; j <= w; ++j) v += at(j) >= i;
    for (int l = 1; l <= i - 1; ++l) v += at(w + l) >= i - l;
    s.parts.push_back(v);
  }
  if (!is_valid(spec, s) || partition_to_diagonal(spec, s) != d)
    throw InvalidInput("diagonal sequence " + format(d) + " is not the diagonal form of a shape");
  return s;
}

std::vector<UpEdge<Partition>> l_up_edges(const BoxSpec& spec, const Partition& s) {
  require_valid(spec, s);
  std::vector<UpEdge<Partition>> out;
  for (int l = 1; l <= spec.k; ++l) {
    Partition t = s;
    ++t.parts[l - 1];
    if (is_valid(spec, t)) out.push_back({t, spec.width() - t.parts[l - 1] + l});
  }
  return out;
}

std::vector<UpEdge<Tableau>> l_up_edges(const BoxSpec& spec, const Tableau& t) {
  if (t.order != Order::increasing || !is_valid(spec, t)) throw InvalidInput("expected an L tableau");
  std::vector<UpEdge<Tableau>> out;
  for (std::size_t r = 0; r < t.entries.size(); ++r) {
    int i = t.entries[r] - 1;
    if (i < 1 || std::find(t.entries.begin(), t.entries.end(), i) != t.entries.end()) continue;
    Tableau u = t;
    u.entries[r] = i;
    out.push_back({u, i});
  }
  return out;
}

std::vector<UpEdge<CircleState>> l_up_edges(const BoxSpec& spec, const CircleState& c) {
  if (c.scheme != Scheme::L || !is_valid(spec, c)) throw InvalidInput("expected an L-scheme circle state");
  std::vector<UpEdge<CircleState>> out;
  for (int i = 1; i < spec.N; ++i)
    if (c.bits[i - 1] == 0 && c.bits[i] == 1) {
      CircleState t = c;
      t.bits[i - 1] = 1;
      t.bits[i] = 0;
      out.push_back({t, i});
    }
  return out;
}

std::vector<UpEdge<DiagonalCoords>> l_up_edges(const BoxSpec& spec, const DiagonalCoords& d) {
  if (!is_valid(spec, d)) throw InvalidInput("not a valid diagonal sequence");
  std::vector<UpEdge<DiagonalCoords>> out;
  for (int l = 1; l < spec.N; ++l) {
    DiagonalCoords e = d;
    ++e.values[l - 1];
    if (is_valid(spec, e)) out.push_back({e, l});
  }
  return out;
}

ColoredLattice build_l_tilde(const BoxSpec& spec) {
  std::vector<ColoredLattice> chains;
  for (int r = 1; r <= spec.k; ++r) {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (int c = 0; c <= spec.width(); ++c) {
      names.push_back(std::to_string(c));
      if (c) edges.push_back({std::size_t(c - 1), std::size_t(c), box_color(spec, r, c)});
    }
    chains.push_back(ColoredLattice::from_edges(std::move(names), std::move(edges)));
  }
  return product(chains);
}

std::size_t l_tilde_index(const BoxSpec& spec, const std::vector<int>& positions) {
  std::vector<std::size_t> sizes(spec.k, spec.width() + 1);
  std::vector<std::size_t> coords(positions.begin(), positions.end());
  return product_index(sizes, coords);
}

std::vector<std::size_t> l_tab_members(const BoxSpec& spec) {
  std::vector<std::size_t> out;
  for (const auto& s : all_partitions(spec)) out.push_back(l_tilde_index(spec, s.parts));
  std::sort(out.begin(), out.end());
  return out;
}

ColoredLattice build_l_tab(const BoxSpec& spec) {
  return induced_sublattice(build_l_tilde(spec), l_tab_members(spec));
}

Partition partition_meet(const Partition& a, const Partition& b) {
  if (a.parts.size() != b.parts.size()) throw InvalidInput("shapes of different heights");
  Partition m = a;
  for (std::size_t i = 0; i < m.parts.size(); ++i) m.parts[i] = std::min(a.parts[i], b.parts[i]);
  return m;
}

Partition partition_join(const Partition& a, const Partition& b) {
  if (a.parts.size() != b.parts.size()) throw InvalidInput("shapes of different heights");
  Partition m = a;
  for (std::size_t i = 0; i < m.parts.size(); ++i) m.parts[i] = std::max(a.parts[i], b.parts[i]);
  return m;
}

int partition_rank(const Partition& s) { return std::accumulate(s.parts.begin(), s.parts.end(), 0); }

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Comma separated integers, optional surrounding brackets.
std::vector<int> parse_ints(std::string_view text, char open, char close) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == open) {
    if (body.back() != close) throw InvalidInput("unbalanced bracket in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t pos = 0, item = 1;
  while (true) {
    auto comma = body.find(',', pos);
    auto tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InvalidInput("entry " + std::to_string(item) + " ('" + std::string(tok) + "') is not an integer");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++item;
  }
  return out;
}

}  // namespace

std::string format(const Partition& s) { return join_ints(s.parts, ","); }
std::string format(const Tableau& t) { return "{" + join_ints(t.entries, ",") + "}"; }
std::string format(const DiagonalCoords& d) { return "(" + join_ints(d.values, ",") + ")"; }

std::string format(const CircleState& c) {
  std::string out;
  for (int b : c.bits) out += b ? '1' : '0';
  return out;
}

Partition parse_partition(const BoxSpec& spec, std::string_view text) {
  Partition s{parse_ints(text, '(', ')')};
  if (static_cast<int>(s.parts.size()) > spec.k) {
    // trailing zeros beyond k rows are harmless
    for (std::size_t i = spec.k; i < s.parts.size(); ++i)
      if (s.parts[i] != 0)
        throw InvalidInput("row " + std::to_string(i + 1) + " exceeds the " + std::to_string(spec.k) + "-row box");
    s.parts.resize(spec.k);
  }
  s.parts.resize(spec.k, 0);
  require_valid(spec, s);
  return s;
}

Tableau parse_tableau(const BoxSpec& spec, std::string_view text, Order order) {
  Tableau t{parse_ints(text, '{', '}'), order};
  if (static_cast<int>(t.entries.size()) != spec.k)
    throw InvalidInput("tableau needs " + std::to_string(spec.k) + " entries");
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (t.entries[i] < 1 || t.entries[i] > spec.N)
      throw InvalidInput("entry " + std::to_string(i + 1) + " outside 1.." + std::to_string(spec.N));
    if (i && (t.entries[i] > t.entries[i - 1]) != (order == Order::increasing))
      throw InvalidInput("entry " + std::to_string(i + 1) + " breaks strict " +
                         (order == Order::increasing ? "increase" : "decrease"));
  }
  return t;
}

CircleState parse_circle(const BoxSpec& spec, std::string_view text, Scheme scheme) {
  CircleState c{{}, scheme};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw InvalidInput("position " + std::to_string(i + 1) + " of circle state is not 0/1");
    c.bits.push_back(text[i] - '0');
  }
  if (!is_valid(spec, c))
    throw InvalidInput("circle state must have length " + std::to_string(spec.N) + " and " +
                       std::to_string(spec.k) + " ones");
  return c;
}

DiagonalCoords parse_diagonal(const BoxSpec& spec, std::string_view text) {
  DiagonalCoords d{parse_ints(text, '(', ')')};
  if (static_cast<int>(d.values.size()) != spec.N - 1)
    throw InvalidInput("diagonal form needs " + std::to_string(spec.N - 1) + " entries");
  if (!is_valid(spec, d)) throw InvalidInput("not a valid diagonal sequence: " + format(d));
  return d;
}

}  // namespace dlat
