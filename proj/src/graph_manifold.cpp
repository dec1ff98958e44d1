#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "twkit/assemble.hpp"
#include "twkit/error.hpp"

namespace twkit {

namespace {

struct Piece {
  std::array<FacetRef, 2> facets;
  EdgeRef vertical;    // never layered on, so it stays on the piece
  EdgeRef horizontal;  // as built, before any layering
};

// Seifert piece with `spare` unfilled docking sites, appended to tri.
std::vector<Piece> add_node(Triangulation& tri, const SfsSpec& node, int spare) {
  node.check();
  const int r = static_cast<int>(node.fibers.size());
  const int g = node.base == BaseSurface::NonOrientable ? node.genus : 0;
  int sites = r + spare;
  if (g > 0 && sites < 2) sites = 2;
  const CoreAssembly core = core_assembly(std::max(1, sites + g));
  Triangulation part = core.tri;
  for (int j = 0; j < g; ++j) {
    const int o = part.insert(moebius_module().tri);
    part.glue(o + 0, 3, 3 * j + 2, 3, Perm4(2, 0, 1, 3));
    part.glue(o + 2, 2, 3 * j + 0, 2, Perm4());
  }
  const int available = static_cast<int>(core.sites.size()) - g;
  if (available < spare) throw Error(ErrorKind::SiteExhausted, "node needs " + std::to_string(spare) + " spare sites");
  // Fibers first, spare sites last, anything in between filled trivially.
  for (int i = 0; i < available - spare; ++i) {
    const Fiber f = i < r ? node.fibers[static_cast<std::size_t>(i)] : Fiber{1, 0};
    attach_fiber(part, core.sites[static_cast<std::size_t>(g + i)], f);
  }
  const int offset = tri.insert(part);
  std::vector<Piece> out;
  for (int i = available - spare; i < available; ++i) {
    const SiteTriangle& t = core.sites[static_cast<std::size_t>(g + i)].triangles[0];
    const SiteTriangle& u = core.sites[static_cast<std::size_t>(g + i)].triangles[1];
    Piece p;
    p.facets = {FacetRef{t.facet.tet + offset, t.facet.facet}, FacetRef{u.facet.tet + offset, u.facet.facet}};
    p.vertical = {t.facet.tet + offset, t.hv, t.vd};
    p.horizontal = {t.facet.tet + offset, t.hd, t.hv};
    out.push_back(p);
  }
  return out;
}

void require_tree(const GraphManifoldSpec& spec) {
  const int n = static_cast<int>(spec.nodes.size());
  if (n == 0) throw Error(ErrorKind::NotATree, "no nodes");
  if (static_cast<int>(spec.arcs.size()) != n - 1) throw Error(ErrorKind::NotATree, "a tree on n nodes has n-1 arcs");
  Multigraph g(n);
  for (const auto& a : spec.arcs) {
    if (a.u == a.v) throw Error(ErrorKind::NotATree, "loop at node " + std::to_string(a.u));
    g.add_arc(a.u, a.v);
  }
  if (!is_connected(g)) throw Error(ErrorKind::NotATree, "arcs do not connect all nodes");
}

// Edge classes lying in both triangles of the piece and nowhere else on the boundary.
std::vector<int> layerable_edges(const Triangulation& tri, const SkeletonSummary& sk, const Piece& p) {
  std::map<int, int> boundary_slots;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(t, f)) continue;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (a != f && b != f) ++boundary_slots[sk.edge(t, a, b)];
    }
  std::array<std::set<int>, 2> in;
  for (int i = 0; i < 2; ++i) {
    const auto [t, f] = p.facets[static_cast<std::size_t>(i)];
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (a != f && b != f) in[static_cast<std::size_t>(i)].insert(sk.edge(t, a, b));
  }
  std::vector<int> out;
  for (int e : in[0])
    if (in[1].contains(e) && boundary_slots[e] == 2) out.push_back(e);
  return out;
}

Piece layer_word(Triangulation& tri, Piece p, const std::vector<int>& word) {
  for (int idx : word) {
    const auto sk = compute_skeleton(tri);
    const auto edges = layerable_edges(tri, sk, p);
    if (idx < 0 || idx >= static_cast<int>(edges.size()))
      throw Error(ErrorKind::InvalidSpec, "arc word index " + std::to_string(idx) + " outside 0.." + std::to_string(edges.size()) + ")");
    const int n = layer_on_edge_in_place(tri, edges[static_cast<std::size_t>(idx)]);
    p.facets = {FacetRef{n, 3}, FacetRef{n, 2}};
  }
  return p;
}

// Glues piece x onto piece y; candidates sending x's vertical edge onto y's
// horizontal edge come first.
bool close_pieces(Triangulation& tri, const Piece& x, const Piece& y, bool final_step) {
  const auto sk = compute_skeleton(tri);
  struct Candidate {
    Triangulation tri;
    int score;
  };
  std::vector<Candidate> found;
  const int x_vertical = x.vertical.class_in(sk);
  const int y_horizontal = y.horizontal.class_in(sk);
  for (int pairing = 0; pairing < 2; ++pairing) {
    const FacetRef x0 = x.facets[0], x1 = x.facets[1];
    const FacetRef y0 = y.facets[static_cast<std::size_t>(pairing)], y1 = y.facets[static_cast<std::size_t>(1 - pairing)];
    auto corners = [](int f) {
      std::array<int, 3> c{};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) c[static_cast<std::size_t>(k++)] = v;
      return c;
    };
    const auto cx0 = corners(x0.facet), cx1 = corners(x1.facet), cy0 = corners(y0.facet), cy1 = corners(y1.facet);
    auto perm_for = [](FacetRef from, const std::array<int, 3>& cf, FacetRef to, const std::array<int, 3>& ct, const std::array<int, 3>& m) {
      std::array<int, 4> im{};
      im[static_cast<std::size_t>(from.facet)] = to.facet;
      for (int i = 0; i < 3; ++i) im[static_cast<std::size_t>(cf[static_cast<std::size_t>(i)])] = ct[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
      return Perm4::from_images(im);
    };
    std::array<int, 3> m0{0, 1, 2};
    do {
      std::array<int, 3> m1{0, 1, 2};
      do {
        Triangulation trial = tri;
        const Perm4 p0 = perm_for(x0, cx0, y0, cy0, m0);
        const Perm4 p1 = perm_for(x1, cx1, y1, cy1, m1);
        trial.glue(x0.tet, x0.facet, y0.tet, y0.facet, p0);
        trial.glue(x1.tet, x1.facet, y1.tet, y1.facet, p1);
        const auto report = validate(trial);
        if (!report.valid() || (final_step && report.status != Validity::ClosedManifold) || !orientation(trial)) continue;
        int score = 1;
        for (int a = 0; a < 3 && score; ++a)
          for (int b = a + 1; b < 3; ++b)
            if (sk.edge(x0.tet, cx0[static_cast<std::size_t>(a)], cx0[static_cast<std::size_t>(b)]) == x_vertical &&
                sk.edge(y0.tet, p0[cx0[static_cast<std::size_t>(a)]], p0[cx0[static_cast<std::size_t>(b)]]) == y_horizontal)
              score = 0;
        found.push_back({std::move(trial), score});
      } while (std::next_permutation(m1.begin(), m1.end()));
    } while (std::next_permutation(m0.begin(), m0.end()));
  }
  if (found.empty()) return false;
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.score < b.score; });
  tri = std::move(found.front().tri);
  return true;
}

}  // namespace

Triangulation graph_manifold(const GraphManifoldSpec& spec) {
  require_tree(spec);
  const int n = static_cast<int>(spec.nodes.size());
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& a : spec.arcs) {
    ++degree[static_cast<std::size_t>(a.u)];
    ++degree[static_cast<std::size_t>(a.v)];
  }
  if (n == 1) return sfs(spec.nodes[0]);
  Triangulation tri;
  std::vector<std::vector<Piece>> spare(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    spare[static_cast<std::size_t>(i)] = add_node(tri, spec.nodes[static_cast<std::size_t>(i)], degree[static_cast<std::size_t>(i)]);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < spec.arcs.size(); ++k) {
    const auto& arc = spec.arcs[k];
    auto& su = spare[static_cast<std::size_t>(arc.u)];
    auto& sv = spare[static_cast<std::size_t>(arc.v)];
    if (next[static_cast<std::size_t>(arc.u)] >= su.size() || next[static_cast<std::size_t>(arc.v)] >= sv.size())
      throw Error(ErrorKind::SiteExhausted, "arc " + std::to_string(k) + " has no spare docking site left");
    Piece pu = su[next[static_cast<std::size_t>(arc.u)]++];
    const Piece pv = sv[next[static_cast<std::size_t>(arc.v)]++];
    pu = layer_word(tri, pu, arc.word);
    const bool last = k + 1 == spec.arcs.size();
    bool closed = close_pieces(tri, pu, pv, last);
    // Extend the word by up to two extra layerings until a closure exists.
    for (int extra = 0; !closed && extra < 6; ++extra) {
      Triangulation trial = tri;
      std::vector<int> more{extra % 2};
      if (extra >= 2) more = {(extra - 2) / 2, (extra - 2) % 2};
      try {
        const Piece q = layer_word(trial, pu, more);
        if (close_pieces(trial, q, pv, last)) {
          tri = std::move(trial);
          closed = true;
        }
      } catch (const Error&) {
      }
    }
    if (!closed) throw Error(ErrorKind::NonSimplicialClosure, "arc " + std::to_string(k) + " admits no simplicial closure");
  }
  return tri;
}

}  // namespace twkit
