// Brute-force reference computations used by the tests. Nothing here calls
// the library's solvers or homology code; only the data types are shared.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twkit/multigraph.hpp"
#include "twkit/triangulation.hpp"

namespace oracle {

using twkit::Multigraph;
using twkit::Triangulation;
using Big = boost::multiprecision::cpp_int;

inline std::vector<std::uint32_t> adjacency_masks(const Multigraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.node_count), 0);
  for (auto [u, v] : g.arcs)
    if (u != v) {
      adj[static_cast<std::size_t>(u)] |= 1u << v;
      adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
  return adj;
}

// Treewidth by the elimination DP: f(S) = min over v in S of
// max(f(S - v), |Q(S - v, v)|), Q = vertices outside S reachable from v
// through S - v. Exponential; n <= 20.
inline int treewidth(const Multigraph& g) {
  const int n = g.node_count;
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> f(std::size_t{1} << n, 1 << 20);
  f[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      const std::uint32_t rest = s & ~(1u << v);
      // flood from v through rest
      std::uint32_t seen = 1u << v, frontier = 1u << v, reach = 0;
      while (frontier) {
        const int x = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        const std::uint32_t nb = adj[static_cast<std::size_t>(x)] & ~seen;
        seen |= nb;
        frontier |= nb & rest;
        reach |= nb & ~rest & ~(1u << v);
      }
      const int q = __builtin_popcount(reach & ~s);
      f[s] = std::min(f[s], std::max(f[rest], q));
    }
  }
  return f[full];
}

// Cut between a node set and its complement; loops never count.
inline int cut(const Multigraph& g, std::uint32_t s) {
  int c = 0;
  for (auto [u, v] : g.arcs)
    if (u != v && ((s >> u & 1) != (s >> v & 1))) ++c;
  return c;
}

// Cutwidth: g(S) = max(cut(S), min over v in S of g(S - v)).
inline int cutwidth(const Multigraph& g) {
  const int n = g.node_count;
  if (n <= 1) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> f(std::size_t{1} << n, 1 << 20);
  f[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 1 << 20;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) best = std::min(best, f[s & ~(1u << v)]);
    f[s] = std::max(best, cut(g, s));
  }
  return f[full];
}

// Largest cut between consecutive prefixes of an order.
inline int order_width(const Multigraph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.node_count), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  int w = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    int c = 0;
    for (auto [u, v] : g.arcs) {
      const int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
      if (u != v && (a <= static_cast<int>(k)) != (b <= static_cast<int>(k))) ++c;
    }
    w = std::max(w, c);
  }
  return w;
}

inline bool is_permutation_of_nodes(const Multigraph& g, std::vector<int> order) {
  std::sort(order.begin(), order.end());
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    if (order[static_cast<std::size_t>(i)] != i) return false;
  return static_cast<int>(order.size()) == g.node_count;
}

// Series-parallel reduction: tw <= 2 iff repeatedly deleting vertices of
// degree <= 1 and suppressing degree-2 vertices empties the graph.
inline bool treewidth_at_most_two(const Multigraph& g) {
  std::vector<std::set<int>> adj(static_cast<std::size_t>(g.node_count));
  for (auto [u, v] : g.arcs)
    if (u != v) {
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
  std::vector<bool> alive(adj.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      const std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (int u : nb) adj[static_cast<std::size_t>(u)].erase(static_cast<int>(v));
      if (nb.size() == 2) {
        adj[static_cast<std::size_t>(nb[0])].insert(nb[1]);
        adj[static_cast<std::size_t>(nb[1])].insert(nb[0]);
      }
      adj[v].clear();
      alive[v] = false;
      changed = true;
    }
  }
  return std::none_of(alive.begin(), alive.end(), [](bool a) { return a; });
}

// Simple graph: no loops, parallel arcs merged; canonical sorted arc list.
inline std::set<std::pair<int, int>> simple_arcs(const Multigraph& g) {
  std::set<std::pair<int, int>> s;
  for (auto [u, v] : g.arcs)
    if (u != v) s.insert({std::min(u, v), std::max(u, v)});
  return s;
}

inline bool simple_is_path(const Multigraph& g) {
  const auto arcs = simple_arcs(g);
  if (static_cast<int>(arcs.size()) != g.node_count - 1) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.node_count), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.node_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [u, v] : arcs) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    parent[static_cast<std::size_t>(find(u))] = find(v);
  }
  for (int v = 0; v < g.node_count; ++v)
    if (deg[static_cast<std::size_t>(v)] > 2 || find(v) != find(0)) return false;
  return true;
}

// Smith invariant factors of a small integer matrix by plain pivoting.
struct Abelian {
  int free_rank = 0;
  std::vector<Big> torsion;  // factors > 1, each dividing the next
  Big torsion_order() const {
    Big p = 1;
    for (const auto& t : torsion) p *= t;
    return p;
  }
};

inline Abelian cokernel(std::vector<std::vector<Big>> m, int generators) {
  // rows are relations, columns generators
  std::vector<Big> diag;
  int top = 0;
  const int rows = static_cast<int>(m.size());
  for (int col0 = 0; col0 < generators && top < rows; ++col0) {
    for (;;) {
      // smallest nonzero entry in the active block
      int pr = -1, pc = -1;
      for (int r = top; r < rows; ++r)
        for (int c = top; c < generators; ++c)
          if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0 &&
              (pr < 0 || abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) < abs(m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)]))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) goto done;
      std::swap(m[static_cast<std::size_t>(top)], m[static_cast<std::size_t>(pr)]);
      for (auto& row : m) std::swap(row[static_cast<std::size_t>(top)], row[static_cast<std::size_t>(pc)]);
      const Big p = m[static_cast<std::size_t>(top)][static_cast<std::size_t>(top)];
      bool clean = true;
      for (int r = top + 1; r < rows; ++r) {
        const Big q = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)] / p;
        for (int c = top; c < generators; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= q * m[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)];
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)] != 0) clean = false;
      }
      for (int c = top + 1; c < generators; ++c) {
        const Big q = m[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)] / p;
        for (int r = top; r < rows; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= q * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)];
        if (m[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m[static_cast<std::size_t>(top)][static_cast<std::size_t>(top)]));
    ++top;
  }
done:
  Abelian a;
  a.free_rank = generators - static_cast<int>(diag.size());
  // Diagonal to invariant factors: multiset of prime-power parts is enough
  // for the order; normalise by repeated gcd/lcm swaps.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Big g = gcd(diag[i], diag[j]);
      const Big l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  for (const auto& d : diag)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

// H1 as the abelianised fundamental group of the dual 2-complex: one
// generator per glued facet pair off a spanning tree of the dual graph, one
// relation per interior edge (the loop of facets around it).
inline Abelian dual_h1(const Triangulation& tri) {
  const int n = tri.size();
  std::map<std::pair<int, int>, int> pair_index;  // least (tet, facet) -> generator id or -1 for tree
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int gens = 0;
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& gl = tri.adjacent(t, f);
      if (!gl) continue;
      if (std::pair{gl->tet, gl->facet} < std::pair{t, f}) continue;
      const int a = find(t), b = find(gl->tet);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        pair_index[{t, f}] = -1;
      } else {
        pair_index[{t, f}] = gens++;
      }
    }
  // crossing (t,f) forwards adds +gen if (t,f) is the least side
  auto crossing = [&](int t, int f, std::vector<Big>& row) -> bool {
    const auto& gl = tri.adjacent(t, f);
    if (!gl) return false;
    const bool least = std::pair{t, f} < std::pair{gl->tet, gl->facet};
    const int id = least ? pair_index[{t, f}] : pair_index[{gl->tet, gl->facet}];
    if (id >= 0) row[static_cast<std::size_t>(id)] += least ? 1 : -1;
    return true;
  };
  std::set<std::pair<int, int>> done;  // (tet, local edge as 4a+b with a<b)
  std::vector<std::vector<Big>> relations;
  for (int t = 0; t < n; ++t)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (done.contains({t, 4 * a + b})) continue;
        int c = -1, d = -1;
        for (int x = 0; x < 4; ++x)
          if (x != a && x != b) (c < 0 ? c : d) = x;
        std::vector<Big> row(static_cast<std::size_t>(gens), 0);
        int ct = t, ca = a, cb = b, cc = c, cd = d;
        bool closed = true;
        for (int steps = 0;; ++steps) {
          done.insert({ct, 4 * std::min(ca, cb) + std::max(ca, cb)});
          const auto& gl = tri.adjacent(ct, cd);
          if (!crossing(ct, cd, row)) {
            closed = false;
            break;
          }
          const twkit::Perm4 p = gl->perm;
          const int nt = gl->tet, na = p[ca], nb = p[cb], nc = p[cd], nd = p[cc];
          ct = nt;
          ca = na;
          cb = nb;
          cc = nc;
          cd = nd;
          if (ct == t && ((ca == a && cb == b) || (ca == b && cb == a)) && cc == c && cd == d) break;
          if (steps > 8 * n + 8) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          // walk the other way from the start to mark the rest of a boundary edge
          ct = t, ca = a, cb = b, cc = d, cd = c;
          for (int steps = 0; steps < 8 * n + 8; ++steps) {
            done.insert({ct, 4 * std::min(ca, cb) + std::max(ca, cb)});
            const auto& gl = tri.adjacent(ct, cd);
            if (!gl) break;
            const twkit::Perm4 p = gl->perm;
            const int nt = gl->tet, na = p[ca], nb = p[cb], nc = p[cd], nd = p[cc];
            ct = nt, ca = na, cb = nb, cc = nc, cd = nd;
          }
          continue;
        }
        relations.push_back(std::move(row));
      }
  return cokernel(std::move(relations), gens);
}

// Boundary surface statistics from the raw gluing table.
struct BoundaryStats {
  int triangles = 0;
  int edges = 0;
  int vertices = 0;
  int euler() const { return vertices - edges + triangles; }
};

inline BoundaryStats boundary_stats(const Triangulation& tri) {
  // union-find over (tet, vertex) and (tet, edge) slots, merged across glued facets
  const int n = tri.size();
  std::vector<int> pv(static_cast<std::size_t>(4 * n)), pe(static_cast<std::size_t>(16 * n));
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pe.begin(), pe.end(), 0);
  auto find = [](std::vector<int>& p, int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  };
  auto eid = [](int t, int a, int b) { return 16 * t + 4 * std::min(a, b) + std::max(a, b); };
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& gl = tri.adjacent(t, f);
      if (!gl) continue;
      for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        pv[static_cast<std::size_t>(find(pv, 4 * t + a))] = find(pv, 4 * gl->tet + gl->perm[a]);
        for (int b = a + 1; b < 4; ++b)
          if (b != f) pe[static_cast<std::size_t>(find(pe, eid(t, a, b)))] = find(pe, eid(gl->tet, gl->perm[a], gl->perm[b]));
      }
    }
  BoundaryStats s;
  std::set<int> vs, es;
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      if (tri.adjacent(t, f)) continue;
      ++s.triangles;
      for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        vs.insert(find(pv, 4 * t + a));
        for (int b = a + 1; b < 4; ++b)
          if (b != f) es.insert(find(pe, eid(t, a, b)));
      }
    }
  s.vertices = static_cast<int>(vs.size());
  s.edges = static_cast<int>(es.size());
  return s;
}

// Reference gluing blocks, one entry per glued pair.
inline const std::vector<std::string_view> kLst011 = {
    "D0(023) -> D1(013)", "D0(123) -> D1(120)", "D1(023) -> D2(201)", "D1(123) -> D2(301)", "D2(023) -> D2(312)"};
inline const std::vector<std::string_view> kCoreA3 = {"D0(012) -> D1(012)", "D1(013) -> D2(013)", "D2(023) -> D0(312)"};
inline const std::vector<std::string_view> kMoebius = {"T0(123) -> T1(123)", "T0(023) -> T1(031)", "T1(012) -> T2(201)",
                                                       "T1(023) -> T2(023)", "T0(013) -> T2(132)"};

}  // namespace oracle
