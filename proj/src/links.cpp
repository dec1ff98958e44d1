#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "twkit/error.hpp"
#include "twkit/skeleton.hpp"

namespace twkit {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

void join(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

// Link vertex of corner (i,v) towards u, indexed 16*i + 4*v + u.
int link_vertex(int tet, int v, int u) { return 16 * tet + 4 * v + u; }

}  // namespace

int SurfaceClass::genus() const {
  const int closed_chi = euler_char + boundary_components;
  return orientable ? (2 - closed_chi) / 2 : 2 - closed_chi;
}

std::string SurfaceClass::describe() const {
  if (is_sphere()) return "sphere";
  if (is_disk()) return "disk";
  if (is_annulus()) return "annulus";
  if (is_moebius()) return "moebius";
  if (is_three_punctured_sphere()) return "3-punctured sphere";
  std::ostringstream out;
  out << (orientable ? "orientable" : "non-orientable") << " chi=" << euler_char
      << " boundary=" << boundary_components;
  return out.str();
}

std::vector<SurfaceClass> vertex_link_classes(const Triangulation& tri) {
  return vertex_link_classes(tri, compute_skeleton(tri));
}

namespace {

// Shared by vertex_link_classes and validate; `singular` marks links whose
// boundary arcs do not form disjoint circles.
std::vector<SurfaceClass> link_classes(const Triangulation& tri, const SkeletonSummary& sk, std::vector<bool>* singular) {
  const int n = tri.size();
  const int classes = sk.vertex_count;
  std::vector<int> parent(static_cast<std::size_t>(16 * n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.adjacent(i, f);
      if (!g) continue;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        for (int u = 0; u < 4; ++u)
          if (u != v && u != f) join(parent, link_vertex(i, v, u), link_vertex(g->tet, g->perm[v], g->perm[u]));
      }
    }

  std::vector<long> triangles(static_cast<std::size_t>(classes), 0);
  std::vector<long> half_edges(static_cast<std::size_t>(classes), 0);
  std::vector<std::vector<int>> link_vertices(static_cast<std::size_t>(classes));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < 4; ++v) {
      const auto c = static_cast<std::size_t>(sk.vertex(i, v));
      ++triangles[c];
      for (int f = 0; f < 4; ++f)
        if (f != v) half_edges[c] += tri.is_glued(i, f) ? 1 : 2;
      for (int u = 0; u < 4; ++u)
        if (u != v) link_vertices[c].push_back(find_root(parent, link_vertex(i, v, u)));
    }

  // Orientability: propagate a sign over the corners of each vertex class.
  std::vector<int> sign(static_cast<std::size_t>(4 * n), 0);
  std::vector<bool> orientable(static_cast<std::size_t>(classes), true);
  for (int start = 0; start < 4 * n; ++start) {
    if (sign[static_cast<std::size_t>(start)] != 0) continue;
    sign[static_cast<std::size_t>(start)] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop();
      const int i = x / 4;
      const int v = x % 4;
      for (int f = 0; f < 4; ++f) {
        if (f == v) continue;
        const auto& g = tri.adjacent(i, f);
        if (!g) continue;
        const int y = 4 * g->tet + g->perm[v];
        const int want = -sign[static_cast<std::size_t>(x)] * g->perm.sign();
        if (sign[static_cast<std::size_t>(y)] == 0) {
          sign[static_cast<std::size_t>(y)] = want;
          todo.push(y);
        } else if (sign[static_cast<std::size_t>(y)] != want) {
          orientable[static_cast<std::size_t>(sk.vertex(i, v))] = false;
        }
      }
    }
  }

  // Boundary arcs: one per unglued facet per corner of that facet.
  std::vector<std::map<int, std::vector<int>>> boundary_adj(static_cast<std::size_t>(classes));
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(i, f)) continue;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        std::array<int, 2> ends{};
        int k = 0;
        for (int u = 0; u < 4; ++u)
          if (u != v && u != f) ends[static_cast<std::size_t>(k++)] = find_root(parent, link_vertex(i, v, u));
        auto& adj = boundary_adj[static_cast<std::size_t>(sk.vertex(i, v))];
        adj[ends[0]].push_back(ends[1]);
        adj[ends[1]].push_back(ends[0]);
      }
    }

  std::vector<SurfaceClass> out(static_cast<std::size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    auto& verts = link_vertices[static_cast<std::size_t>(c)];
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    SurfaceClass& s = out[static_cast<std::size_t>(c)];
    s.orientable = orientable[static_cast<std::size_t>(c)];
    const long edges = half_edges[static_cast<std::size_t>(c)] / 2;
    s.euler_char = static_cast<int>(static_cast<long>(verts.size()) - edges + triangles[static_cast<std::size_t>(c)]);

    // Boundary components, each measured in normal arcs.
    const auto& adj = boundary_adj[static_cast<std::size_t>(c)];
    std::map<int, bool> seen;
    for (const auto& [start, _] : adj) {
      if (seen[start]) continue;
      int arcs2 = 0;
      std::vector<int> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        const auto& nb = adj.at(x);
        arcs2 += static_cast<int>(nb.size());
        for (int y : nb)
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
      }
      ++s.boundary_components;
      s.boundary_cycle_lengths.push_back(arcs2 / 2);
    }
    std::sort(s.boundary_cycle_lengths.begin(), s.boundary_cycle_lengths.end());
    if (singular) {
      singular->push_back(std::any_of(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() != 2; }));
    }
  }
  return out;
}

}  // namespace

std::vector<SurfaceClass> vertex_link_classes(const Triangulation& tri, const SkeletonSummary& sk) {
  return link_classes(tri, sk, nullptr);
}

std::string ValidityReport::summary() const {
  std::string s;
  switch (status) {
    case Validity::ClosedManifold: s = "closed_3mfd"; break;
    case Validity::BoundedManifold: s = "bounded_3mfd"; break;
    case Validity::Invalid: s = "invalid"; break;
  }
  if (empty) s += " (empty)";
  for (const auto& r : reasons) s += "; " + r;
  return s;
}

ValidityReport validate(const Triangulation& tri) {
  ValidityReport report;
  if (tri.empty()) {
    report.empty = true;
    return report;
  }
  const auto sk = compute_skeleton(tri);
  for (int e = 0; e < sk.edge_count; ++e)
    if (sk.edge_reversed[static_cast<std::size_t>(e)])
      report.reasons.push_back("edge " + std::to_string(e) + " identified with itself in reverse");
  std::vector<bool> singular;
  const auto links = link_classes(tri, sk, &singular);
  for (int v = 0; v < sk.vertex_count; ++v) {
    const auto& l = links[static_cast<std::size_t>(v)];
    if (!l.is_sphere() && !l.is_disk())
      report.reasons.push_back("vertex " + std::to_string(v) + " link is " + l.describe());
    else if (singular[static_cast<std::size_t>(v)])
      report.reasons.push_back("vertex " + std::to_string(v) + " link boundary is singular");
  }
  if (!report.reasons.empty())
    report.status = Validity::Invalid;
  else
    report.status = tri.is_closed() ? Validity::ClosedManifold : Validity::BoundedManifold;
  return report;
}

std::optional<std::vector<int>> orientation(const Triangulation& tri) {
  const int n = tri.size();
  std::vector<int> o(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (o[static_cast<std::size_t>(start)] != 0) continue;
    o[static_cast<std::size_t>(start)] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.adjacent(i, f);
        if (!g) continue;
        const int want = -o[static_cast<std::size_t>(i)] * g->perm.sign();
        auto& oj = o[static_cast<std::size_t>(g->tet)];
        if (oj == 0) {
          oj = want;
          todo.push(g->tet);
        } else if (oj != want) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

bool is_orientable(const Triangulation& tri) {
  const auto report = validate(tri);
  if (!report.valid()) throw Error(ErrorKind::InvalidComplex, report.summary());
  return orientation(tri).has_value();
}

BoundarySurface boundary_surface(const Triangulation& tri) {
  if (tri.is_closed()) throw Error(ErrorKind::ClosedManifold, "triangulation has no boundary");
  const auto sk = compute_skeleton(tri);
  BoundarySurface s;
  for (int i = 0; i < tri.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(i, f)) continue;
      BoundarySurface::Triangle t;
      t.facet = {i, f};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) t.corners[static_cast<std::size_t>(k++)] = v;
      for (int c = 0; c < 3; ++c) {
        const int a = t.corners[static_cast<std::size_t>((c + 1) % 3)];
        const int b = t.corners[static_cast<std::size_t>((c + 2) % 3)];
        t.vertices[static_cast<std::size_t>(c)] = sk.vertex(i, t.corners[static_cast<std::size_t>(c)]);
        t.edges[static_cast<std::size_t>(c)] = sk.edge(i, a, b);
        s.edge_classes.push_back(t.edges[static_cast<std::size_t>(c)]);
        s.vertex_classes.push_back(t.vertices[static_cast<std::size_t>(c)]);
      }
      s.triangles.push_back(t);
    }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(s.edge_classes);
  dedupe(s.vertex_classes);

  // Components and orientability by walking across shared edge classes. Each
  // triangle is oriented c0->c1->c2; two triangles meeting along an edge agree
  // when they traverse it in opposite directions.
  std::map<int, std::vector<std::pair<int, int>>> uses;  // edge class -> (triangle, direction)
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& tr = s.triangles[static_cast<std::size_t>(t)];
    for (int c = 0; c < 3; ++c) {
      const int a = tr.corners[static_cast<std::size_t>((c + 1) % 3)];
      const int b = tr.corners[static_cast<std::size_t>((c + 2) % 3)];
      uses[tr.edges[static_cast<std::size_t>(c)]].push_back({t, sk.edge_orientation(tr.facet.tet, a, b)});
    }
  }
  std::vector<int> side(static_cast<std::size_t>(s.triangle_count()), 0);
  for (int start = 0; start < s.triangle_count(); ++start) {
    if (side[static_cast<std::size_t>(start)] != 0) continue;
    ++s.component_count;
    side[static_cast<std::size_t>(start)] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      const auto& tr = s.triangles[static_cast<std::size_t>(t)];
      for (int c = 0; c < 3; ++c) {
        const auto& list = uses[tr.edges[static_cast<std::size_t>(c)]];
        if (list.size() != 2) continue;
        const auto [t0, d0] = list[0];
        const auto [t1, d1] = list[1];
        const int here = t0 == t ? 0 : 1;
        const int other_t = here == 0 ? t1 : t0;
        const int d_here = here == 0 ? d0 : d1;
        const int d_other = here == 0 ? d1 : d0;
        const int want = -side[static_cast<std::size_t>(t)] * d_here * d_other;
        auto& so = side[static_cast<std::size_t>(other_t)];
        if (so == 0) {
          so = want;
          stack.push_back(other_t);
        } else if (so != want) {
          s.orientable = false;
        }
      }
    }
  }
  return s;
}

}  // namespace twkit
