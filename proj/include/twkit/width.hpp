#pragma once

#include <vector>

#include "twkit/multigraph.hpp"

namespace twkit {

inline constexpr int kDefaultTreewidthCap = 25;
inline constexpr int kDefaultCutwidthCap = 20;

enum class Execution { Serial, Parallel };

struct TreewidthResult {
  int width = 0;
  TreeDecomposition decomposition;
  std::vector<int> elimination_order;
};

struct CutwidthResult {
  int width = 0;
  LinearOrdering ordering;
};

/// Exact treewidth of simplify(g). Safe reductions (simplicial and almost
/// simplicial vertices) run first; the cap bounds the size of what remains,
/// which is solved by a layered subset DP pruned against a heuristic bound.
TreewidthResult treewidth_exact(const Multigraph& g, int cap = kDefaultTreewidthCap,
                                Execution exec = Execution::Parallel);
/// Unpruned DP over every vertex subset, no reductions. Small graphs only.
TreewidthResult treewidth_reference(const Multigraph& g, int cap = 20);

/// Bags and tree induced by eliminating vertices of simplify(g) in order.
TreeDecomposition decomposition_from_elimination(const Multigraph& g, const std::vector<int>& order);
int elimination_width(const Multigraph& g, const std::vector<int>& order);

/// Exact cutwidth; the witness is the lexicographically least optimal order.
CutwidthResult cutwidth_exact(const Multigraph& g, int cap = kDefaultCutwidthCap,
                              Execution exec = Execution::Parallel);

}  // namespace twkit
