#include "walsh/graph_oracle.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walsh {

namespace {

constexpr int kMaxAutomorphismOrder = 10;
constexpr int kMaxMatchingOrder = 12;
constexpr int kMaxCanonicalOrder = 8;
constexpr int kMaxBurnsideOrder = 7;

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Connectivity of g restricted to the vertices not in `removed`.
bool connected_without(const SmallGraph& g, std::uint32_t removed) {
  const int n = g.order();
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1U);
  const std::uint32_t alive = all & ~removed;
  if (alive == 0) return true;
  std::uint32_t seen = 1U << std::countr_zero(alive);
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = g.neighbours(v) & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == alive;
}

}  // namespace

// ------------------------------------------------------------ SmallGraph

SmallGraph::SmallGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0U) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("SmallGraph supports 0..32 vertices");
}

SmallGraph::SmallGraph(int n, const std::vector<Edge>& edges) : SmallGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SmallGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::size_t SmallGraph::size() const {
  std::size_t twice = 0;
  for (std::uint32_t row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

int SmallGraph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void SmallGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("multiple edges are not allowed");
  adj_[u] |= 1U << v;
  adj_[v] |= 1U << u;
}

void SmallGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(1U << v);
  adj_[v] &= ~(1U << u);
}

void SmallGraph::set_poles(int p0, int p1) {
  check_vertex(p0);
  check_vertex(p1);
  if (p0 == p1) throw std::invalid_argument("poles must be distinct");
  poles_ = Edge{p0, p1};
}

bool SmallGraph::is_connected() const { return connected_without(*this, 0U); }

bool SmallGraph::is_biconnected() const {
  if (n_ < 2) return false;
  if (n_ == 2) return has_edge(0, 1);
  if (!is_connected()) return false;
  for (int v = 0; v < n_; ++v) {
    if (!connected_without(*this, 1U << v)) return false;
  }
  return true;
}

SmallGraph complete_graph(int n) {
  SmallGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SmallGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph m_graph() {
  SmallGraph g(8);
  const int left[] = {0, 1, 2, 3, 4};
  const int right[] = {0, 1, 5, 6, 7};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      g.add_edge(left[i], left[j]);
      if (!(right[i] <= 1 && right[j] <= 1)) g.add_edge(right[i], right[j]);
    }
  }
  return g;
}

SmallGraph m_star_graph() {
  SmallGraph g = m_graph();
  g.remove_edge(0, 1);
  return g;
}

SmallGraph k5_minus_edge_network() {
  SmallGraph g = complete_graph(5);
  g.remove_edge(0, 1);
  g.set_poles(0, 1);
  return g;
}

SmallGraph single_edge_network() {
  SmallGraph g(2, {{0, 1}});
  g.set_poles(0, 1);
  return g;
}

void check_network(const SmallGraph& network) {
  if (!network.poles()) throw std::invalid_argument("graph has no poles");
  SmallGraph closed = network;
  const auto [p0, p1] = *network.poles();
  if (!closed.has_edge(p0, p1)) closed.add_edge(p0, p1);
  if (!closed.is_biconnected()) {
    throw std::invalid_argument("network with its poles joined is not 2-connected");
  }
}

SmallGraph read_graph(std::istream& is) {
  std::optional<std::pair<long, long>> poles;
  std::set<long> labels;
  std::vector<std::pair<long, long>> raw_edges;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;
    if (first == "poles") {
      long p, q;
      if (!(row >> p >> q)) throw std::invalid_argument("bad poles line: '" + line + "'");
      poles = {p, q};
      labels.insert(p);
      labels.insert(q);
    } else if (first == "vertex") {
      long v;
      if (!(row >> v)) throw std::invalid_argument("bad vertex line: '" + line + "'");
      labels.insert(v);
    } else {
      long u, v;
      try {
        u = std::stol(first);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad edge line: '" + line + "'");
      }
      if (!(row >> v)) throw std::invalid_argument("bad edge line: '" + line + "'");
      if (u < 0 || v < 0) throw std::invalid_argument("vertex labels must be nonnegative");
      labels.insert(u);
      labels.insert(v);
      raw_edges.emplace_back(u, v);
    }
  }
  auto index_of = [&](long label) {
    return static_cast<int>(std::distance(labels.begin(), labels.find(label)));
  };
  SmallGraph g(static_cast<int>(labels.size()));
  for (const auto& [u, v] : raw_edges) g.add_edge(index_of(u), index_of(v));
  if (poles) g.set_poles(index_of(poles->first), index_of(poles->second));
  return g;
}

// ----------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(image.size(), false);
  for (int v : image) {
    if (v < 0 || v >= size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> counts(image.size() + 1, 0);
  std::vector<bool> seen(image.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int v = start; !seen[v]; v = image[v]) {
      seen[v] = true;
      ++length;
    }
    ++counts[length];
  }
  return counts;
}

// --------------------------------------------------------- automorphisms

bool is_automorphism(const SmallGraph& g, const Permutation& sigma) {
  if (sigma.size() != g.order() || !sigma.is_bijection()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(sigma(u), sigma(v))) return false;
  }
  return true;
}

std::vector<Permutation> automorphisms(const SmallGraph& g, const std::vector<int>& colours) {
  const int n = g.order();
  if (n > kMaxAutomorphismOrder) {
    throw std::invalid_argument("automorphism search is limited to 10 vertices");
  }
  if (!colours.empty() && static_cast<int>(colours.size()) != n) {
    throw std::invalid_argument("colour vector size mismatch");
  }
  auto colour = [&](int v) { return colours.empty() ? 0 : colours[v]; };

  std::vector<Permutation> found;
  Permutation current = Permutation::identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      found.push_back(current);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v) || colour(w) != colour(v)) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = g.has_edge(u, v) == g.has_edge(current(u), w);
      }
      if (!consistent) continue;
      used[w] = true;
      current.image[v] = w;
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return found;
}

namespace {

// Shared walk over the edge orbits of sigma. `sort_of(e)` picks the pair of
// families (cylindrical, Moebius) that counts edge e.
template <typename SortOf>
Monomial orbit_monomial(const SmallGraph& g, const Permutation& sigma, SortOf sort_of) {
  if (!is_automorphism(g, sigma)) throw std::invalid_argument("permutation is not an automorphism");
  Monomial out;
  const std::vector<int> type = sigma.cycle_type();
  for (std::size_t k = 1; k < type.size(); ++k) {
    if (type[k] > 0) out = out * Monomial(a(static_cast<std::uint32_t>(k)), static_cast<std::uint32_t>(type[k]));
  }
  std::set<Edge> visited;
  for (const Edge& e : g.edges()) {
    if (visited.count(e)) continue;
    const int u = e.first;
    int length = 0;
    Edge cur = e;
    do {
      visited.insert(ordered(cur.first, cur.second));
      cur = {sigma(cur.first), sigma(cur.second)};
      ++length;
    } while (ordered(cur.first, cur.second) != e);
    const bool cylindrical = cur.first == u;
    const auto [cyl_family, mob_family] = sort_of(e);
    out = out * Monomial(make_var(cylindrical ? cyl_family : mob_family, static_cast<std::uint32_t>(length)));
  }
  return out;
}

}  // namespace

Monomial edge_cycle_monomial(const SmallGraph& g, const Permutation& sigma) {
  return orbit_monomial(g, sigma, [](const Edge&) { return std::pair{Family::B, Family::C}; });
}

Monomial matched_edge_cycle_monomial(const SmallGraph& g, const Permutation& sigma,
                                     const std::vector<Edge>& matching) {
  std::set<Edge> in_matching;
  for (const auto& [u, v] : matching) in_matching.insert(ordered(u, v));
  for (const auto& [u, v] : in_matching) {
    if (!in_matching.count(ordered(sigma(u), sigma(v)))) {
      throw std::invalid_argument("matching is not invariant under the permutation");
    }
  }
  return orbit_monomial(g, sigma, [&](const Edge& e) {
    return in_matching.count(e) ? std::pair{Family::B, Family::C}
                                : std::pair{Family::Beta, Family::Gamma};
  });
}

IndexSeries walsh_bruteforce(const std::vector<SmallGraph>& representatives) {
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < representatives.size(); ++j) {
      const SmallGraph& g = representatives[i];
      const SmallGraph& h = representatives[j];
      if (g.order() != h.order() || g.size() != h.size() || g.order() > kMaxCanonicalOrder) continue;
      if (canonical_form(g) == canonical_form(h)) {
        throw std::invalid_argument("representatives are not pairwise non-isomorphic");
      }
    }
  }
  IndexSeries out;
  for (const SmallGraph& g : representatives) {
    const auto group = automorphisms(g);
    const Rational weight(1, static_cast<unsigned long>(group.size()));
    for (const Permutation& sigma : group) out.add_term(edge_cycle_monomial(g, sigma), weight);
  }
  return out;
}

IndexSeries matched_walsh_bruteforce(const SmallGraph& g) {
  const auto group = automorphisms(g);
  const auto all_matchings = matchings(g);
  const Rational weight(1, static_cast<unsigned long>(group.size()));
  IndexSeries out;
  for (const Permutation& sigma : group) {
    for (const auto& mu : all_matchings) {
      std::set<Edge> members(mu.begin(), mu.end());
      const bool fixed = std::all_of(mu.begin(), mu.end(), [&](const Edge& e) {
        return members.count(ordered(sigma(e.first), sigma(e.second))) > 0;
      });
      if (fixed) out.add_term(matched_edge_cycle_monomial(g, sigma, mu), weight);
    }
  }
  return out;
}

IndexSeries network_walsh_bruteforce(const SmallGraph& network, PoleSign sign) {
  check_network(network);
  const auto [p0, p1] = *network.poles();
  std::vector<int> colours(static_cast<std::size_t>(network.order()), 0);
  colours[p0] = colours[p1] = 1;

  std::vector<Permutation> chosen;
  for (Permutation& sigma : automorphisms(network, colours)) {
    const bool fixes_poles = sigma(p0) == p0;
    if (fixes_poles == (sign == PoleSign::Plus)) chosen.push_back(std::move(sigma));
  }
  IndexSeries out;
  if (chosen.empty()) return out;
  const Monomial pole_cycles = sign == PoleSign::Plus ? Monomial(a(1), 2) : Monomial(a(2));
  const Rational weight(1, static_cast<unsigned long>(chosen.size()));
  for (const Permutation& sigma : chosen) {
    out.add_term(edge_cycle_monomial(network, sigma) / pole_cycles, weight);
  }
  return out;
}

std::vector<std::vector<Edge>> matchings(const SmallGraph& g) {
  if (g.order() > kMaxMatchingOrder) throw std::invalid_argument("matching enumeration is limited to 12 vertices");
  const auto all_edges = g.edges();
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  auto extend = [&](auto&& self, std::size_t next, std::uint32_t covered) -> void {
    if (next == all_edges.size()) {
      out.push_back(current);
      return;
    }
    self(self, next + 1, covered);
    const auto [u, v] = all_edges[next];
    const std::uint32_t ends = (1U << u) | (1U << v);
    if ((covered & ends) == 0) {
      current.push_back(all_edges[next]);
      self(self, next + 1, covered | ends);
      current.pop_back();
    }
  };
  extend(extend, 0, 0U);
  return out;
}

std::string canonical_form(const SmallGraph& g, const std::vector<int>& colours) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw std::invalid_argument("canonical form is limited to 8 vertices");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  std::string candidate;
  do {
    candidate.clear();
    if (!colours.empty()) {
      for (int v : order) candidate += static_cast<char>('A' + colours[v]);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) candidate += g.has_edge(order[i], order[j]) ? '1' : '0';
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::to_string(n) + ":" + best;
}

std::vector<SmallGraph> isomorphism_classes(const std::vector<SmallGraph>& graphs) {
  std::set<std::string> seen;
  std::vector<SmallGraph> out;
  for (const SmallGraph& g : graphs) {
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  }
  return out;
}

std::map<int, Integer> burnside_unlabelled_count(int n,
                                                 const std::function<bool(const SmallGraph&)>& in_class) {
  if (n < 0 || n > kMaxBurnsideOrder) throw std::invalid_argument("Burnside counting is limited to 7 vertices");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::map<Edge, std::size_t> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;

  std::map<int, Integer> fixed_total;
  Integer group_order = 0;
  Permutation sigma = Permutation::identity(n);
  do {
    ++group_order;
    // Orbits of sigma acting on vertex pairs.
    std::vector<std::vector<Edge>> orbits;
    std::vector<bool> seen(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (seen[i]) continue;
      std::vector<Edge> orbit;
      Edge cur = pairs[i];
      while (!seen[pair_index[cur]]) {
        seen[pair_index[cur]] = true;
        orbit.push_back(cur);
        cur = ordered(sigma(cur.first), sigma(cur.second));
      }
      orbits.push_back(std::move(orbit));
    }
    // Graphs fixed by sigma are exactly the unions of orbits.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
      SmallGraph g(n);
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        if ((mask >> k) & 1U) {
          for (const auto& [u, v] : orbits[k]) g.add_edge(u, v);
        }
      }
      if (in_class(g)) fixed_total[static_cast<int>(g.size())] += 1;
    }
  } while (std::next_permutation(sigma.image.begin(), sigma.image.end()));

  std::map<int, Integer> out;
  for (const auto& [m, total] : fixed_total) {
    if (total % group_order != 0) throw std::logic_error("Burnside sum not divisible by group order");
    out[m] = total / group_order;
  }
  return out;
}

std::map<int, Integer> burnside_unlabelled_count(int n, const std::vector<SmallGraph>& labelled_class) {
  std::set<std::vector<Edge>> members;
  for (const SmallGraph& g : labelled_class) {
    if (g.order() != n) throw std::invalid_argument("class members must have n vertices");
    members.insert(g.edges());
  }
  return burnside_unlabelled_count(n, [&](const SmallGraph& g) { return members.count(g.edges()) > 0; });
}

}  // namespace walsh
