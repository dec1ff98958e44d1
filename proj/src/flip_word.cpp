#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "twkit/assemble.hpp"
#include "twkit/error.hpp"

namespace twkit {

namespace {

// One component of a boundary surface, with adjacency across edges.
struct SurfacePiece {
  struct Tri {
    FacetRef facet;
    std::array<int, 3> corners{};
    // Across the edge opposite corner j: neighbour triangle and the neighbour
    // corners matching my corners (j+1)%3 and (j+2)%3.
    std::array<int, 3> nb{};
    std::array<std::array<int, 2>, 3> match{};
  };
  std::vector<Tri> tris;
};

// Boundary triangles of tetrahedra lo..hi-1, glued along edge classes.
SurfacePiece surface_piece(const Triangulation& tri, const SkeletonSummary& sk, int lo, int hi) {
  SurfacePiece out;
  struct Slot {
    int t;
    int j;
    int tail;  // corner index at the class tail
    int head;
  };
  std::map<int, std::vector<Slot>> by_edge;
  for (int t = lo; t < hi; ++t)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(t, f)) continue;
      SurfacePiece::Tri tr;
      tr.facet = {t, f};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) tr.corners[static_cast<std::size_t>(k++)] = v;
      const int idx = static_cast<int>(out.tris.size());
      for (int j = 0; j < 3; ++j) {
        const int a = (j + 1) % 3;
        const int b = (j + 2) % 3;
        const int la = tr.corners[static_cast<std::size_t>(a)];
        const int lb = tr.corners[static_cast<std::size_t>(b)];
        const bool forward = sk.edge_orientation(t, la, lb) > 0;
        by_edge[sk.edge(t, la, lb)].push_back({idx, j, forward ? a : b, forward ? b : a});
      }
      out.tris.push_back(tr);
    }
  for (const auto& [e, slots] : by_edge) {
    if (slots.size() != 2) throw Error(ErrorKind::NonSimplicialClosure, "boundary edge not shared by exactly two triangles");
    for (int s = 0; s < 2; ++s) {
      const Slot& me = slots[static_cast<std::size_t>(s)];
      const Slot& other = slots[static_cast<std::size_t>(1 - s)];
      auto& tr = out.tris[static_cast<std::size_t>(me.t)];
      tr.nb[static_cast<std::size_t>(me.j)] = other.t;
      const int first = (me.j + 1) % 3;
      tr.match[static_cast<std::size_t>(me.j)] =
          first == me.tail ? std::array<int, 2>{other.tail, other.head} : std::array<int, 2>{other.head, other.tail};
    }
  }
  return out;
}

using CornerMap = std::array<int, 3>;  // my corner index -> image corner index

// Extends A.tris[0] -> B.tris[b0] with corner map phi to a full isomorphism.
std::optional<std::vector<std::pair<int, CornerMap>>> extend(const SurfacePiece& A, const SurfacePiece& B, int b0, CornerMap phi) {
  const int n = static_cast<int>(A.tris.size());
  if (n != static_cast<int>(B.tris.size())) return std::nullopt;
  std::vector<std::pair<int, CornerMap>> image(static_cast<std::size_t>(n), {-1, {}});
  std::vector<bool> used(B.tris.size(), false);
  image[0] = {b0, phi};
  used[static_cast<std::size_t>(b0)] = true;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    const auto& ta = A.tris[static_cast<std::size_t>(a)];
    const auto [b, m] = image[static_cast<std::size_t>(a)];
    const auto& tb = B.tris[static_cast<std::size_t>(b)];
    for (int j = 0; j < 3; ++j) {
      const int a2 = ta.nb[static_cast<std::size_t>(j)];
      const int jb = m[static_cast<std::size_t>(j)];  // image of the opposite corner
      const int b2 = tb.nb[static_cast<std::size_t>(jb)];
      // Corners of a2 on the shared edge, and where they go in b2.
      const int ea = m[static_cast<std::size_t>((j + 1) % 3)];
      const int eb = m[static_cast<std::size_t>((j + 2) % 3)];
      auto via_b = [&](int corner_in_b) {
        return (jb + 1) % 3 == corner_in_b ? tb.match[static_cast<std::size_t>(jb)][0] : tb.match[static_cast<std::size_t>(jb)][1];
      };
      CornerMap m2{};
      const int c1 = ta.match[static_cast<std::size_t>(j)][0];
      const int c2 = ta.match[static_cast<std::size_t>(j)][1];
      m2[static_cast<std::size_t>(c1)] = via_b(ea);
      m2[static_cast<std::size_t>(c2)] = via_b(eb);
      m2[static_cast<std::size_t>(3 - c1 - c2)] = 3 - m2[static_cast<std::size_t>(c1)] - m2[static_cast<std::size_t>(c2)];
      auto& slot = image[static_cast<std::size_t>(a2)];
      if (slot.first < 0) {
        if (used[static_cast<std::size_t>(b2)]) return std::nullopt;
        used[static_cast<std::size_t>(b2)] = true;
        slot = {b2, m2};
        stack.push_back(a2);
      } else if (slot.first != b2 || slot.second != m2) {
        return std::nullopt;
      }
    }
  }
  for (const auto& s : image)
    if (s.first < 0) return std::nullopt;
  return image;
}

}  // namespace

std::vector<Triangulation> simplicial_closures(const Triangulation& tri, int split) {
  const auto sk = compute_skeleton(tri);
  const SurfacePiece A = surface_piece(tri, sk, 0, split);
  const SurfacePiece B = surface_piece(tri, sk, split, tri.size());
  std::vector<Triangulation> out;
  if (A.tris.empty() || A.tris.size() != B.tris.size()) return out;
  static constexpr std::array<CornerMap, 6> maps{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int b0 = 0; b0 < static_cast<int>(B.tris.size()); ++b0)
    for (const auto& phi : maps) {
      const auto iso = extend(A, B, b0, phi);
      if (!iso) continue;
      Triangulation closed = tri;
      for (std::size_t a = 0; a < A.tris.size(); ++a) {
        const auto& ta = A.tris[a];
        const auto& tb = B.tris[static_cast<std::size_t>((*iso)[a].first)];
        std::array<int, 4> images{};
        images[static_cast<std::size_t>(ta.facet.facet)] = tb.facet.facet;
        for (int c = 0; c < 3; ++c)
          images[static_cast<std::size_t>(ta.corners[static_cast<std::size_t>(c)])] =
              tb.corners[static_cast<std::size_t>((*iso)[a].second[static_cast<std::size_t>(c)])];
        closed.glue(ta.facet.tet, ta.facet.facet, tb.facet.tet, tb.facet.facet, Perm4::from_images(images));
      }
      if (validate(closed).status == Validity::ClosedManifold && orientation(closed)) out.push_back(std::move(closed));
    }
  return out;
}

namespace {

struct Built {
  Triangulation open;
  int handlebody = 0;  // tetrahedra in T' (and in T'')
  int split = 0;       // first tetrahedron of T''
};

Built build_open(const FlipWord& w) {
  const auto h = layered_handlebody(w.genus);
  Built b;
  b.open = h.tri;
  b.handlebody = h.tri.size();
  for (std::size_t i = 0; i < w.flips.size(); ++i) {
    const int k = w.flips[i];
    const auto bs = boundary_surface(b.open);
    if (k < 0 || k >= bs.edge_count())
      throw Error(ErrorKind::BadFlipIndex, "flip " + std::to_string(i) + " index " + std::to_string(k) + " outside 0.." +
                                               std::to_string(bs.edge_count() - 1));
    try {
      layer_on_edge_in_place(b.open, bs.edge_classes[static_cast<std::size_t>(k)]);
    } catch (const Error& e) {
      throw Error(ErrorKind::BadFlipIndex, "flip " + std::to_string(i) + ": " + e.what());
    }
  }
  b.split = b.open.insert(h.tri);
  return b;
}

}  // namespace

int closure_count(const FlipWord& w) {
  const Built b = build_open(w);
  return static_cast<int>(simplicial_closures(b.open, b.split).size());
}

FlipWordResult layered_from_flip_word(const FlipWord& w) {
  const Built b = build_open(w);
  auto closures = simplicial_closures(b.open, b.split);
  if (w.closure < 0 || w.closure >= static_cast<int>(closures.size()))
    throw Error(ErrorKind::NonSimplicialClosure, "closure " + std::to_string(w.closure) + " requested, " +
                                                     std::to_string(closures.size()) + " available");
  FlipWordResult out;
  out.tri = std::move(closures[static_cast<std::size_t>(w.closure)]);
  // T' in layering order, then the flips, then T'' in either direction.
  const Multigraph g = dual_graph(out.tri);
  std::vector<int> head;
  for (int i = 0; i < b.split; ++i) head.push_back(i);
  std::vector<int> best;
  int best_width = -1;
  for (bool reverse : {true, false}) {
    std::vector<int> order = head;
    for (int i = 0; i < b.handlebody; ++i) order.push_back(reverse ? out.tri.size() - 1 - i : b.split + i);
    const int width = ordering_width(g, order);
    if (best_width < 0 || width < best_width) {
      best_width = width;
      best = order;
    }
  }
  out.ordering = {best, best_width};
  return out;
}

}  // namespace twkit
