#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twkit/triangulation.hpp"

namespace twkit {

/// Undirected multigraph; arcs are unordered pairs, loops allowed.
struct Multigraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;

  Multigraph() = default;
  explicit Multigraph(int n) : node_count(n) {}
  void add_arc(int u, int v);

  /// Degree per node; a loop counts twice.
  std::vector<int> degrees() const;
  int loop_count() const;
  /// Arcs with u <= v, sorted.
  std::vector<std::pair<int, int>> canonical_arcs() const;
  /// Simple adjacency lists of the simplification.
  std::vector<std::vector<int>> neighbours() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.node_count == b.node_count && a.canonical_arcs() == b.canonical_arcs();
  }
};

/// One node per tetrahedron, one arc per glued facet pair.
Multigraph dual_graph(const Triangulation& tri);
/// Drops loops and collapses parallel arcs.
Multigraph simplify(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// `nodes N` followed by one sorted `u v` line per arc.
std::string write_multigraph(const Multigraph& g);
Multigraph read_multigraph(std::string_view text);
/// Graphviz text with nodes t0..t(n-1) and one edge line per arc.
std::string export_dot(const Multigraph& g);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree;
  int width() const;
};

struct LinearOrdering {
  std::vector<int> order;
  int width = 0;
};

/// Checks coverage of nodes and arcs, that `tree` is a tree, and that each
/// node's bags span a connected subtree.
bool validate_decomposition(const Multigraph& g, const TreeDecomposition& td);
/// Cut sizes between consecutive prefixes; loops never cross a cut.
std::vector<int> cut_profile(const Multigraph& g, const std::vector<int>& order);
int ordering_width(const Multigraph& g, const std::vector<int>& order);
/// True iff order is a permutation of the nodes and width matches.
bool validate_ordering(const Multigraph& g, const LinearOrdering& lo);

enum class ThickPathKind { SingleNode, ThickPath, NotTw1 };

struct ThickPathReport {
  ThickPathKind kind = ThickPathKind::NotTw1;
  bool all_bundles_even = false;  ///< every bundle of parallel non-loop arcs has even size
  std::string name() const;
};

/// For 4-regular multigraphs: is the simplification a path? Throws NotFourRegular.
ThickPathReport classify_thick_path(const Multigraph& g);

}  // namespace twkit
