#pragma once

#include <array>
#include <vector>

#include "twkit/multigraph.hpp"
#include "twkit/skeleton.hpp"
#include "twkit/spec_io.hpp"

namespace twkit {

/// Layers a new tetrahedron N onto boundary edge class e: N's facets 0 (123)
/// and 1 (023) cover the two boundary triangles containing e, with N's edge
/// 23 laid on e in the same direction on both sides. N's facets 2 and 3 are
/// the new boundary triangles and N(01) is the new edge. Returns N's index.
int layer_on_edge_in_place(Triangulation& tri, int edge_class);
Triangulation layer_on_edge(const Triangulation& tri, int edge_class);

/// A boundary edge named by a tetrahedron and two of its vertex labels.
struct EdgeRef {
  int tet = 0;
  int a = 0;
  int b = 1;
  int class_in(const SkeletonSummary& sk) const { return sk.edge(tet, a, b); }
};

/// Signed meridian intersection numbers of the three boundary edges.
struct LstTriple {
  long p = 0;
  long q = 0;
  long r = 0;
};

struct LayeredSolidTorus {
  Triangulation tri;
  LstTriple type;
  /// edges[0], edges[1], edges[2] meet the meridian |p|, |q|, |r| times.
  std::array<EdgeRef, 3> edges;
  std::array<long, 3> weights{};
  /// Tetrahedron 0 is outermost: its facets 2 (013) and 3 (012) form the boundary.
  static constexpr int outer = 0;
};

/// Layered solid torus whose boundary edges meet a meridian |p|, |q|, |r|
/// times. Signs are an orientation convention: the triple is accepted when the
/// largest magnitude is the sum of the other two and the entries are coprime.
LayeredSolidTorus lst(long p, long q, long r);

/// One tetrahedron with (013) glued to (023).
Triangulation snapped_ball();

/// A boundary triangle of a docking site, its corners named by the roles of
/// the two edges that meet there.
struct SiteTriangle {
  FacetRef facet;
  int hd = 0;  ///< corner between the horizontal and diagonal edges
  int hv = 0;  ///< corner between the horizontal and vertical edges
  int vd = 0;  ///< corner between the vertical and diagonal edges
};

/// Two boundary triangles sharing a diagonal edge.
struct DockingSite {
  std::array<SiteTriangle, 2> triangles;

  int vertical(const SkeletonSummary& sk, int k) const;
  int horizontal(const SkeletonSummary& sk) const;
  int diagonal(const SkeletonSummary& sk) const;
  DockingSite shifted(int offset) const;
};

struct CoreAssembly {
  Triangulation tri;
  std::vector<DockingSite> sites;
};

/// The core unit A3 (r = 3), r-2 mirrored copies of it (r > 3), or A3 with
/// LST(0,1,1) fills on 1 or 2 sites (r = 2, 1). Throws BadR for r < 1.
/// For r >= 3 the first r-2 sites are the sites {D0(013), D2(012)} of the
/// successive copies.
CoreAssembly core_assembly(int r);

struct MoebiusModule {
  Triangulation tri;
  DockingSite site;
};

MoebiusModule moebius_module();

/// Orientation convention tying the sign of b to the diagonal direction of a site.
inline constexpr int kFiberSign = 1;

/// +1 or -1: how the site's corners (hd, hv, vd) run against the boundary
/// orientation induced by a consistent orientation of tri.
int site_sign(const Triangulation& tri, const DockingSite& site);

/// Glues a layered solid torus onto the site so that the meridian meets the
/// vertical edges a times and the horizontal edge |b| times. Fiber (1,0) is
/// the trivial fill. Throws PreconditionViolated if no orientable choice exists.
void attach_fiber(Triangulation& tri, const DockingSite& site, Fiber fiber);

/// Identifies the two triangles of a site with each other, fixing the hd
/// corner and swapping hv with vd. Fills the site with a (2, site_sign) fiber.
void fold_site(Triangulation& tri, const DockingSite& site);

/// Glues tetrahedra given by global vertex labels along shared triangles.
Triangulation from_simplices(const std::vector<std::array<int, 4>>& simplices);

/// Boundary of the 4-simplex: 5 tetrahedra, closed, each tetrahedron with
/// four distinct vertices and no self-gluings.
Triangulation pentachoron_boundary();

/// Layered triangulation of the genus-g handlebody (3g-2 tetrahedra) from a
/// one-vertex triangulation of the once-punctured non-orientable surface of
/// genus g. Tetrahedra are numbered in layering order. Throws BadGenus.
struct LayeredHandlebody {
  Triangulation tri;
  LinearOrdering layering_order;
};

LayeredHandlebody layered_handlebody(int g);

}  // namespace twkit
