#include <optional>
#include <string>
#include <vector>

#include "twkit/algebra.hpp"
#include "twkit/blocks.hpp"
#include "twkit/error.hpp"

namespace twkit {

namespace {

// The g-spine is the (2g+1)-gon with side word a1 a1 a2 a2 ... ag ag b, fanned
// from corner 0 into triangles (0, k+1, k+2). Each spine triangle has two
// sides; layering happens on the orientable double cover, whose triangles are
// the sides. When both sides of a spine triangle end up covered by
// tetrahedron facets, those facets are glued to each other.

struct Adj {
  int tri = -1;
  std::array<int, 2> map{};  // neighbour corner index of my corners (j+1)%3, (j+2)%3
};

struct SurfaceTriangle {
  std::array<int, 3> c{};  // corner labels: polygon corners (virtual) or tet labels (real)
  bool real = false;
  FacetRef facet;  // real
  int spine = 0;   // virtual
  int side = 0;    // virtual
  std::array<Adj, 3> nb;
  std::array<int, 3> edge{};
  bool alive = true;
};

struct Cover {
  int tet = -1;
  int facet = 0;
  std::array<int, 4> corner{};  // tet label -> polygon corner
};

struct State {
  std::vector<SurfaceTriangle> tris;
  std::vector<std::array<Cover, 2>> cover;  // per spine triangle and side
  Triangulation tri;
  int next_edge = 0;
};

int index_of(const SurfaceTriangle& t, int label) {
  for (int i = 0; i < 3; ++i)
    if (t.c[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

// Adjacency between corner pairs (za, zb) of z and (ta, tb) of t.
void link(State& s, int z, int za, int zb, int t, int ta, int tb, int edge_id) {
  auto set = [&](int x, int xa, int xb, int y, int ya, int yb) {
    auto& tx = s.tris[static_cast<std::size_t>(x)];
    const int j = 3 - xa - xb;
    Adj adj;
    adj.tri = y;
    adj.map[0] = (j + 1) % 3 == xa ? ya : yb;
    adj.map[1] = (j + 2) % 3 == xa ? ya : yb;
    tx.nb[static_cast<std::size_t>(j)] = adj;
    tx.edge[static_cast<std::size_t>(j)] = edge_id;
  };
  set(z, za, zb, t, ta, tb);
  if (t >= 0) set(t, ta, tb, z, za, zb);
}

State initial_state(int g) {
  State s;
  const int n = 2 * g - 1;
  s.cover.assign(static_cast<std::size_t>(n), {});
  for (int k = 0; k < n; ++k)
    for (int side = 0; side < 2; ++side) {
      SurfaceTriangle t;
      t.c = side == 0 ? std::array<int, 3>{0, k + 1, k + 2} : std::array<int, 3>{0, k + 2, k + 1};
      t.spine = k;
      t.side = side;
      t.nb.fill(Adj{});
      s.tris.push_back(t);
    }
  auto id = [](int k, int side) { return 2 * k + side; };
  // Diagonals (0, k+2) between spine triangles k and k+1, same side.
  for (int k = 0; k + 1 < n; ++k)
    for (int side = 0; side < 2; ++side) {
      const int x = id(k, side);
      const int y = id(k + 1, side);
      const auto& tx = s.tris[static_cast<std::size_t>(x)];
      const auto& ty = s.tris[static_cast<std::size_t>(y)];
      link(s, x, index_of(tx, 0), index_of(tx, k + 2), y, index_of(ty, 0), index_of(ty, k + 2), s.next_edge++);
    }
  // Crosscaps: side (2i-2, 2i-1) is glued to (2i-1, 2i) preserving direction.
  for (int i = 1; i <= g; ++i) {
    const int j = 2 * i - 2;
    const int ka = j == 0 ? 0 : j - 1;
    const int kb = j;
    for (int side = 0; side < 2; ++side) {
      const int x = id(ka, side);
      const int y = id(kb, 1 - side);
      const auto& tx = s.tris[static_cast<std::size_t>(x)];
      const auto& ty = s.tris[static_cast<std::size_t>(y)];
      link(s, x, index_of(tx, j), index_of(tx, j + 1), y, index_of(ty, j + 1), index_of(ty, j + 2), s.next_edge++);
    }
  }
  // Side b = (2g, 0) is the boundary of the double cover on both sides.
  for (int side = 0; side < 2; ++side) {
    const int x = id(n - 1, side);
    const auto& tx = s.tris[static_cast<std::size_t>(x)];
    link(s, x, index_of(tx, 2 * g), index_of(tx, 0), -1, 0, 0, s.next_edge++);
  }
  return s;
}

// Surface edge ids of the interior spine edges, in layering order: walk the
// fan and take each triangle's new crosscap side, then the next diagonal.
// Lift l of edge e has id lifts[e][l].
std::vector<std::array<int, 2>> spine_edges(int g) {
  // ids were assigned: diagonals 2k+side (k < 2g-2), then crosscaps.
  const int diagonals = 2 * g - 2;
  auto diag = [&](int k) { return std::array<int, 2>{2 * k, 2 * k + 1}; };
  auto cross = [&](int i) { return std::array<int, 2>{2 * diagonals + 2 * (i - 1), 2 * diagonals + 2 * (i - 1) + 1}; };
  std::vector<std::array<int, 2>> out;
  out.push_back(cross(1));
  int next_cross = 2;
  for (int k = 0; k < diagonals; ++k) {
    out.push_back(diag(k));
    // Triangle k+1 = (0, k+2, k+3) carries side (k+2, k+3); a new crosscap when k+2 is even.
    if ((k + 2) % 2 == 0 && next_cross <= g) out.push_back(cross(next_cross++));
  }
  return out;
}

bool layer(State& s, int edge_id) {
  int x = -1, jx = -1, y = -1, jy = -1;
  for (int t = 0; t < static_cast<int>(s.tris.size()); ++t) {
    const auto& tr = s.tris[static_cast<std::size_t>(t)];
    if (!tr.alive) continue;
    for (int j = 0; j < 3; ++j)
      if (tr.edge[static_cast<std::size_t>(j)] == edge_id) {
        if (x < 0) {
          x = t;
          jx = j;
        } else {
          y = t;
          jy = j;
        }
      }
  }
  if (x < 0 || y < 0 || x == y) return false;
  const SurfaceTriangle X = s.tris[static_cast<std::size_t>(x)];
  const SurfaceTriangle Y = s.tris[static_cast<std::size_t>(y)];
  const int x3 = X.c[static_cast<std::size_t>(jx)];
  const int ux = X.c[static_cast<std::size_t>((jx + 1) % 3)];
  const int vx = X.c[static_cast<std::size_t>((jx + 2) % 3)];
  const Adj& across = X.nb[static_cast<std::size_t>(jx)];
  const int y3 = Y.c[static_cast<std::size_t>(jy)];
  const int uy = Y.c[static_cast<std::size_t>(across.map[0])];
  const int vy = Y.c[static_cast<std::size_t>(across.map[1])];

  const int n = s.tri.add_tetrahedron();
  auto attach = [&](const SurfaceTriangle& w, int facet, std::array<int, 4> labels) {
    // labels[v] = corner of w that N's vertex v lands on (ignored at v = facet)
    if (w.real) {
      std::array<int, 4> images = labels;
      images[static_cast<std::size_t>(facet)] = w.facet.facet;
      s.tri.glue(n, facet, w.facet.tet, w.facet.facet, Perm4::from_images(images));
    } else {
      Cover& c = s.cover[static_cast<std::size_t>(w.spine)][static_cast<std::size_t>(w.side)];
      c.tet = n;
      c.facet = facet;
      c.corner = labels;
    }
  };
  attach(X, 0, {-1, x3, ux, vx});
  attach(Y, 1, {y3, -1, uy, vy});

  const int p = static_cast<int>(s.tris.size());
  const int q = p + 1;
  for (int f : {3, 2}) {
    SurfaceTriangle t;
    t.real = true;
    t.facet = {n, f};
    t.c = f == 3 ? std::array<int, 3>{0, 1, 2} : std::array<int, 3>{0, 1, 3};
    s.tris.push_back(t);
  }
  s.tris[static_cast<std::size_t>(x)].alive = false;
  s.tris[static_cast<std::size_t>(y)].alive = false;

  struct Inherit {
    int w, wa, wb, z, za, zb;
  };
  const std::array<Inherit, 4> inherit{{{x, x3, ux, p, 1, 2}, {x, x3, vx, q, 1, 2}, {y, y3, uy, p, 0, 2}, {y, y3, vy, q, 0, 2}}};
  auto find_inherit = [&](int w, int la, int lb) -> std::optional<std::pair<int, std::array<int, 2>>> {
    for (const auto& h : inherit)
      if (h.w == w && ((h.wa == la && h.wb == lb) || (h.wa == lb && h.wb == la)))
        return std::pair{h.z, h.wa == la ? std::array<int, 2>{h.za, h.zb} : std::array<int, 2>{h.zb, h.za}};
    return std::nullopt;
  };
  for (const auto& h : inherit) {
    const SurfaceTriangle& W = s.tris[static_cast<std::size_t>(h.w)];
    const int ia = index_of(W, h.wa);
    const int ib = index_of(W, h.wb);
    const int k = 3 - ia - ib;
    const Adj& old = W.nb[static_cast<std::size_t>(k)];
    const int eid = W.edge[static_cast<std::size_t>(k)];
    if (old.tri < 0) {
      link(s, h.z, h.za, h.zb, -1, 0, 0, eid);
      continue;
    }
    int ta = (k + 1) % 3 == ia ? old.map[0] : old.map[1];
    int tb = (k + 1) % 3 == ia ? old.map[1] : old.map[0];
    int t = old.tri;
    if (t == x || t == y) {
      const auto& T = s.tris[static_cast<std::size_t>(t)];
      const auto moved = find_inherit(t, T.c[static_cast<std::size_t>(ta)], T.c[static_cast<std::size_t>(tb)]);
      if (!moved) return false;
      t = moved->first;
      ta = moved->second[0];
      tb = moved->second[1];
    }
    link(s, h.z, h.za, h.zb, t, ta, tb, eid);
  }
  link(s, p, 0, 1, q, 0, 1, s.next_edge++);
  return true;
}

std::optional<Triangulation> close_up(const State& s) {
  Triangulation tri = s.tri;
  for (const auto& sides : s.cover) {
    const Cover& a = sides[0];
    const Cover& b = sides[1];
    if (a.tet < 0 && b.tet < 0) return std::nullopt;
    if (a.tet < 0 || b.tet < 0) continue;
    std::array<int, 4> images{};
    images[static_cast<std::size_t>(a.facet)] = b.facet;
    for (int v = 0; v < 4; ++v) {
      if (v == a.facet) continue;
      for (int w = 0; w < 4; ++w)
        if (w != b.facet && b.corner[static_cast<std::size_t>(w)] == a.corner[static_cast<std::size_t>(v)])
          images[static_cast<std::size_t>(v)] = w;
    }
    tri.glue(a.tet, a.facet, b.tet, b.facet, Perm4::from_images(images));
  }
  return tri;
}

bool is_handlebody(const Triangulation& tri, int g) {
  const auto report = validate(tri);
  if (report.status != Validity::BoundedManifold || !orientation(tri)) return false;
  const auto bs = boundary_surface(tri);
  if (bs.component_count != 1 || !bs.orientable || bs.vertex_count() != 1 || bs.euler_char() != 2 - 2 * g) return false;
  if (bs.triangle_count() != 4 * g - 2) return false;
  const auto h = first_homology(tri);
  return h.free_rank == g && h.torsion.empty();
}

bool search(const State& s, const std::vector<std::array<int, 2>>& edges, std::size_t depth, int g, Triangulation& out) {
  if (depth == edges.size()) {
    auto tri = close_up(s);
    if (!tri || !is_handlebody(*tri, g)) return false;
    out = std::move(*tri);
    return true;
  }
  for (int lift = 0; lift < 2; ++lift) {
    State next = s;
    if (!layer(next, edges[depth][static_cast<std::size_t>(lift)])) continue;
    if (search(next, edges, depth + 1, g, out)) return true;
  }
  return false;
}

}  // namespace

LayeredHandlebody layered_handlebody(int g) {
  if (g < 1 || g > 12) throw Error(ErrorKind::BadGenus, "handlebody genus must lie in 1..12, got " + std::to_string(g));
  const State start = initial_state(g);
  const auto edges = spine_edges(g);
  LayeredHandlebody out;
  if (!search(start, edges, 0, g, out.tri))
    throw Error(ErrorKind::PreconditionViolated, "no layering of the genus-" + std::to_string(g) + " spine gives a handlebody");
  out.layering_order.order.resize(static_cast<std::size_t>(out.tri.size()));
  for (int i = 0; i < out.tri.size(); ++i) out.layering_order.order[static_cast<std::size_t>(i)] = i;
  out.layering_order.width = ordering_width(dual_graph(out.tri), out.layering_order.order);
  return out;
}

}  // namespace twkit
