#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "twkit/error.hpp"
#include "twkit/width.hpp"

namespace twkit {

namespace {

using Mask = std::uint32_t;

}  // namespace

// H(S) = smallest possible max cut over the prefixes S, ..., V of any ordering
// that starts with S. Subsets are processed in decreasing popcount layers; all
// subsets in a layer are independent.
CutwidthResult cutwidth_exact(const Multigraph& g, int cap, Execution exec) {
  const int n = g.node_count;
  if (n > std::min(cap, 30))
    throw Error(ErrorKind::TooLarge, "cutwidth needs " + std::to_string(n) + " nodes, cap " + std::to_string(cap));
  CutwidthResult r;
  if (n == 0) return r;

  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.arcs) {
    if (u == v) continue;
    ++mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    ++mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }

  const std::size_t size = std::size_t{1} << n;
  const Mask full = static_cast<Mask>(size - 1);
  std::vector<int> cut(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    const int v = std::countr_zero(static_cast<Mask>(s));
    const Mask before = static_cast<Mask>(s) & (static_cast<Mask>(s) - 1);
    int inside = 0;
    for (Mask b = before; b; b &= b - 1) inside += mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(std::countr_zero(b))];
    cut[s] = cut[before] + degree[static_cast<std::size_t>(v)] - 2 * inside;
  }

  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::size_t s = 0; s < size; ++s) by_size[static_cast<std::size_t>(std::popcount(static_cast<Mask>(s)))].push_back(static_cast<Mask>(s));

  std::vector<int> h(size, 0);
  for (int k = n - 1; k >= 0; --k) {
    const auto& layer = by_size[static_cast<std::size_t>(k)];
    auto update = [&](Mask s) {
      int best = std::numeric_limits<int>::max();
      for (Mask rest = full & ~s; rest; rest &= rest - 1) best = std::min(best, h[s | (rest & -rest)]);
      h[s] = std::max(cut[s], best);
    };
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) if (count > 1024)
      for (std::ptrdiff_t i = 0; i < count; ++i) update(layer[static_cast<std::size_t>(i)]);
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) update(layer[static_cast<std::size_t>(i)]);
    }
  }

  r.width = h[0];
  Mask s = 0;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (!(s & bit) && h[s | bit] <= r.width) {
        r.ordering.order.push_back(v);
        s |= bit;
        break;
      }
    }
  }
  r.ordering.width = r.width;
  return r;
}

}  // namespace twkit
