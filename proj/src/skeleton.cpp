#include "twkit/skeleton.hpp"

#include <algorithm>
#include <numeric>

namespace twkit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Union-find whose elements carry a +/-1 relation to their root.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      parity ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    // Path compression with parity bookkeeping.
    int p = parity;
    while (parent_[static_cast<std::size_t>(x)] != root) {
      const int next = parent_[static_cast<std::size_t>(x)];
      const int step = parity_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      parity_[static_cast<std::size_t>(x)] = p;
      p ^= step;
      x = next;
    }
    return {root, parity};
  }
  // Records a ~ b with relative parity rel; returns false on a contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (ra > rb) std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    parity_[static_cast<std::size_t>(rb)] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace

int SkeletonSummary::edge_orientation(int tet, int a, int b) const {
  const int local = kEdgeNumber[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  const int s = edge_sign[static_cast<std::size_t>(6 * tet + local)];
  return a < b ? s : -s;
}

bool SkeletonSummary::has_reversed_edge() const {
  return std::any_of(edge_reversed.begin(), edge_reversed.end(), [](bool r) { return r; });
}

SkeletonSummary compute_skeleton(const Triangulation& tri) {
  const int n = tri.size();
  SkeletonSummary sk;
  sk.tetrahedra = n;
  UnionFind vuf(static_cast<std::size_t>(4 * n));
  SignedUnionFind euf(static_cast<std::size_t>(6 * n));
  std::vector<bool> reversed_slot(static_cast<std::size_t>(6 * n), false);

  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.adjacent(i, f);
      if (!g) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) vuf.unite(4 * i + v, 4 * g->tet + g->perm[v]);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (a == f || b == f) continue;
          const int pa = g->perm[a];
          const int pb = g->perm[b];
          const int here = 6 * i + kEdgeNumber[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          const int there = 6 * g->tet + kEdgeNumber[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
          if (!euf.unite(here, there, pa < pb ? 0 : 1)) reversed_slot[static_cast<std::size_t>(here)] = true;
        }
    }

  // Vertex classes numbered by first appearance.
  sk.vertex_of.assign(static_cast<std::size_t>(4 * n), -1);
  {
    std::vector<int> id(static_cast<std::size_t>(4 * n), -1);
    for (int x = 0; x < 4 * n; ++x) {
      const int r = vuf.find(x);
      if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = sk.vertex_count++;
      sk.vertex_of[static_cast<std::size_t>(x)] = id[static_cast<std::size_t>(r)];
    }
  }

  sk.edge_of.assign(static_cast<std::size_t>(6 * n), -1);
  sk.edge_sign.assign(static_cast<std::size_t>(6 * n), 1);
  {
    std::vector<int> id(static_cast<std::size_t>(6 * n), -1);
    std::vector<int> rep_parity;
    for (int x = 0; x < 6 * n; ++x) {
      auto [r, parity] = euf.find(x);
      if (id[static_cast<std::size_t>(r)] < 0) {
        id[static_cast<std::size_t>(r)] = sk.edge_count++;
        rep_parity.push_back(parity);
        sk.edge_rep.push_back({x / 6, x % 6});
        sk.edge_degree.push_back(0);
        sk.edge_boundary.push_back(false);
        sk.edge_reversed.push_back(false);
      }
      const int c = id[static_cast<std::size_t>(r)];
      sk.edge_of[static_cast<std::size_t>(x)] = c;
      sk.edge_sign[static_cast<std::size_t>(x)] = (parity ^ rep_parity[static_cast<std::size_t>(c)]) ? -1 : 1;
      ++sk.edge_degree[static_cast<std::size_t>(c)];
      if (reversed_slot[static_cast<std::size_t>(x)]) sk.edge_reversed[static_cast<std::size_t>(c)] = true;
    }
  }

  sk.triangle_of.assign(static_cast<std::size_t>(4 * n), -1);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      if (sk.triangle_of[static_cast<std::size_t>(4 * i + f)] >= 0) continue;
      const int c = sk.triangle_count++;
      sk.triangle_of[static_cast<std::size_t>(4 * i + f)] = c;
      sk.triangle_rep.push_back({i, f});
      const auto& g = tri.adjacent(i, f);
      sk.triangle_boundary.push_back(!g.has_value());
      if (g) sk.triangle_of[static_cast<std::size_t>(4 * g->tet + g->facet)] = c;
    }

  sk.vertex_boundary.assign(static_cast<std::size_t>(sk.vertex_count), false);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(i, f)) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) sk.vertex_boundary[static_cast<std::size_t>(sk.vertex(i, v))] = true;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (a != f && b != f) sk.edge_boundary[static_cast<std::size_t>(sk.edge(i, a, b))] = true;
    }
  return sk;
}

}  // namespace twkit
