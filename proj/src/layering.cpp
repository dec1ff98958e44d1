#include <string>
#include <vector>

#include "twkit/blocks.hpp"
#include "twkit/error.hpp"

namespace twkit {

namespace {

struct Slot {
  FacetRef facet;
  int third = 0;  // corner of the facet not on the edge
  int tail = 0;   // endpoints ordered along the class orientation
  int head = 0;
};

std::vector<Slot> boundary_slots(const Triangulation& tri, const SkeletonSummary& sk, int e) {
  std::vector<Slot> out;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(t, f)) continue;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (a == f || b == f || sk.edge(t, a, b) != e) continue;
          Slot s;
          s.facet = {t, f};
          s.third = 6 - f - a - b;
          if (sk.edge_orientation(t, a, b) > 0) {
            s.tail = a;
            s.head = b;
          } else {
            s.tail = b;
            s.head = a;
          }
          out.push_back(s);
        }
    }
  return out;
}

}  // namespace

int layer_on_edge_in_place(Triangulation& tri, int edge_class) {
  const auto sk = compute_skeleton(tri);
  if (edge_class < 0 || edge_class >= sk.edge_count || !sk.edge_boundary[static_cast<std::size_t>(edge_class)])
    throw Error(ErrorKind::NotBoundaryEdge, "edge class " + std::to_string(edge_class) + " is not on the boundary");
  const auto slots = boundary_slots(tri, sk, edge_class);
  if (slots.size() == 1)
    throw Error(ErrorKind::EdgeOnBoundaryOfSurface, "edge class " + std::to_string(edge_class) + " lies in one boundary triangle only");
  if (slots.size() != 2)
    throw Error(ErrorKind::PreconditionViolated, "edge class " + std::to_string(edge_class) + " lies in more than two boundary triangle slots");
  const Slot& x = slots[0];
  const Slot& y = slots[1];
  if (x.facet == y.facet)
    throw Error(ErrorKind::PreconditionViolated, "both sides of edge class " + std::to_string(edge_class) + " lie in one boundary triangle");
  const int n = tri.add_tetrahedron();
  // N(123) onto X with N1 -> third, N(023) onto Y with N0 -> third; N(23) runs along e.
  tri.glue(n, 0, x.facet.tet, x.facet.facet, Perm4::from_images({x.facet.facet, x.third, x.tail, x.head}));
  tri.glue(n, 1, y.facet.tet, y.facet.facet, Perm4::from_images({y.third, y.facet.facet, y.tail, y.head}));
  return n;
}

Triangulation layer_on_edge(const Triangulation& tri, int edge_class) {
  Triangulation out = tri;
  layer_on_edge_in_place(out, edge_class);
  return out;
}

}  // namespace twkit
