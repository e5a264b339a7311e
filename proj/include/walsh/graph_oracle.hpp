#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walsh/pole_sign.hpp"
#include "walsh/series.hpp"

namespace walsh {

using Edge = std::pair<int, int>;

/// Small simple graph on vertices 0..n-1, stored as adjacency bit rows.
/// A network additionally names its two poles; every other vertex is
/// internal.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 32;

  SmallGraph() = default;
  explicit SmallGraph(int n);
  SmallGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const;  // edge count
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const;
  std::uint32_t neighbours(int v) const { return adj_[v]; }
  std::vector<Edge> edges() const;  // (u, v) with u < v, lexicographic

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::optional<Edge>& poles() const { return poles_; }
  bool is_network() const { return poles_.has_value(); }
  // Marks (p0, p1) as poles 0 and 1. Does not check 2-connectivity.
  void set_poles(int p0, int p1);

  bool is_connected() const;
  // K2 counts as 2-connected; so does any connected graph on >= 3 vertices
  // without a cut vertex.
  bool is_biconnected() const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint32_t> adj_;
  std::optional<Edge> poles_;
};

SmallGraph complete_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph path_graph(int n);
// Two K5's glued along an edge (M), and the same with the glued edge removed (M*).
SmallGraph m_graph();
SmallGraph m_star_graph();
// K5 minus the edge between its poles 0 and 1.
SmallGraph k5_minus_edge_network();
// Poles joined by a single edge, no internal vertices.
SmallGraph single_edge_network();
// Networks must satisfy: N with the edge between the poles added is 2-connected.
void check_network(const SmallGraph& network);

/// Parses the edge-list text format: optional "poles p q" header, optional
/// "vertex v" lines for isolated vertices, then one "u v" edge per line.
/// Labels are arbitrary nonnegative integers, compacted in increasing order.
/// '#' starts a comment.
SmallGraph read_graph(std::istream& is);

struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int v) const { return image[v]; }
  static Permutation identity(int n);
  bool is_bijection() const;
  // counts[k] = number of k-cycles (index 0 unused).
  std::vector<int> cycle_type() const;
};

/// All automorphisms, by backtracking with degree (and optional colour)
/// pruning. Colours, when given, must be preserved. Requires order() <= 10.
std::vector<Permutation> automorphisms(const SmallGraph& g, const std::vector<int>& colours = {});

bool is_automorphism(const SmallGraph& g, const Permutation& sigma);

/// Weight a_1^{s1} a_2^{s2} ... b_l^{cyl_l} ... c_l^{mob_l} of an automorphism.
/// Throws std::invalid_argument if sigma is not an automorphism of g.
Monomial edge_cycle_monomial(const SmallGraph& g, const Permutation& sigma);

/// Same, with the edges of `matching` counted by b/c and the other edges by
/// beta/gamma. `matching` must be invariant under sigma.
Monomial matched_edge_cycle_monomial(const SmallGraph& g, const Permutation& sigma,
                                     const std::vector<Edge>& matching);

/// Walsh index series from its definition: the sum over representatives of
/// (1/|Aut G|) * sum of edge_cycle_monomial. Representatives of order <= 8
/// are checked to be pairwise non-isomorphic.
IndexSeries walsh_bruteforce(const std::vector<SmallGraph>& representatives);

/// Extended series of matched graphs: sums over sigma in Aut(G) and over
/// the matchings fixed by sigma.
IndexSeries matched_walsh_bruteforce(const SmallGraph& g);

/// W^+ or W^- of a single network type: automorphisms fixing (Plus) or
/// swapping (Minus) the poles, weighted with the pole cycles divided out.
/// Returns zero for Minus when the network is not tau-symmetric.
IndexSeries network_walsh_bruteforce(const SmallGraph& network, PoleSign sign);

/// Every matching of g, the empty one included. Requires order() <= 12.
std::vector<std::vector<Edge>> matchings(const SmallGraph& g);

/// Minimum adjacency string over all vertex relabellings (colours, when
/// given, are part of the string and sorted first). Requires order() <= 8.
std::string canonical_form(const SmallGraph& g, const std::vector<int>& colours = {});

/// Keeps the first graph of every isomorphism class.
std::vector<SmallGraph> isomorphism_classes(const std::vector<SmallGraph>& graphs);

/// Number of isomorphism classes of the labelled graphs on [n] accepted by
/// `in_class` (which must be closed under relabelling), keyed by edge
/// count: (1/n!) * sum over sigma in S_n of |Fix(sigma)|. Requires n <= 7.
std::map<int, Integer> burnside_unlabelled_count(int n,
                                                 const std::function<bool(const SmallGraph&)>& in_class);
// Convenience overload: the class is given by an explicit list of labelled graphs.
std::map<int, Integer> burnside_unlabelled_count(int n, const std::vector<SmallGraph>& labelled_class);

}  // namespace walsh
