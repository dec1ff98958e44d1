#pragma once

#include <array>
#include <string>
#include <vector>

#include "twkit/triangulation.hpp"

namespace twkit {

/// Local edge numbering inside a tetrahedron: 01 02 03 12 13 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
/// kEdgeNumber[a][b] is the local edge joining a and b (-1 on the diagonal).
inline constexpr std::array<std::array<int, 4>, 4> kEdgeNumber{{{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}}};

/// Vertex, edge and triangle classes of a triangulation under its gluings.
///
/// Edge classes carry an orientation fixed by their least (tet, local edge)
/// member, oriented from the smaller to the larger local label; edge_sign
/// records whether each slot agrees with it. A class that would need to be
/// identified with itself in reverse is flagged in `reversed`.
struct SkeletonSummary {
  int tetrahedra = 0;

  std::vector<int> vertex_of;  ///< [4*tet + v] -> vertex class
  std::vector<int> edge_of;    ///< [6*tet + e] -> edge class
  std::vector<int> edge_sign;  ///< [6*tet + e] -> +1 / -1 relative to the class orientation
  std::vector<int> triangle_of;  ///< [4*tet + f] -> triangle class

  int vertex_count = 0;
  int edge_count = 0;
  int triangle_count = 0;

  std::vector<int> edge_degree;       ///< tetrahedron edge slots per class
  std::vector<bool> edge_boundary;    ///< class meets an unglued facet
  std::vector<bool> edge_reversed;    ///< identified with itself in reverse
  std::vector<std::array<int, 2>> edge_rep;  ///< least member as {tet, local edge}
  std::vector<bool> vertex_boundary;
  std::vector<bool> triangle_boundary;
  std::vector<FacetRef> triangle_rep;  ///< least facet in each triangle class

  int vertex(int tet, int v) const { return vertex_of[static_cast<std::size_t>(4 * tet + v)]; }
  int edge(int tet, int local) const { return edge_of[static_cast<std::size_t>(6 * tet + local)]; }
  int edge(int tet, int a, int b) const { return edge(tet, kEdgeNumber[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]); }
  /// Orientation of the oriented tetrahedron edge a->b relative to its class.
  int edge_orientation(int tet, int a, int b) const;
  int triangle(int tet, int f) const { return triangle_of[static_cast<std::size_t>(4 * tet + f)]; }

  bool has_reversed_edge() const;
  /// V - E + F - T over all cells (boundary cells included).
  long euler_characteristic() const {
    return static_cast<long>(vertex_count) - edge_count + triangle_count - tetrahedra;
  }
};

SkeletonSummary compute_skeleton(const Triangulation& tri);

/// Combinatorial summary of a compact surface.
struct SurfaceClass {
  bool orientable = true;
  int euler_char = 0;
  int boundary_components = 0;
  std::vector<int> boundary_cycle_lengths;  ///< sorted ascending

  bool is_sphere() const { return orientable && euler_char == 2 && boundary_components == 0; }
  bool is_disk() const { return orientable && euler_char == 1 && boundary_components == 1; }
  bool is_annulus() const { return orientable && euler_char == 0 && boundary_components == 2; }
  bool is_moebius() const { return !orientable && euler_char == 0 && boundary_components == 1; }
  bool is_three_punctured_sphere() const { return orientable && euler_char == -1 && boundary_components == 3; }
  /// Genus of the closed surface obtained by capping boundary circles.
  int genus() const;
  std::string describe() const;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
  friend auto operator<=>(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Link of every vertex class, in vertex-class order.
std::vector<SurfaceClass> vertex_link_classes(const Triangulation& tri);
std::vector<SurfaceClass> vertex_link_classes(const Triangulation& tri, const SkeletonSummary& sk);

enum class Validity { ClosedManifold, BoundedManifold, Invalid };

struct ValidityReport {
  Validity status = Validity::ClosedManifold;
  bool empty = false;  ///< no tetrahedra at all; vacuously closed
  std::vector<std::string> reasons;

  bool valid() const { return status != Validity::Invalid; }
  std::string summary() const;
};

ValidityReport validate(const Triangulation& tri);

/// Consistent orientation of every tetrahedron, if one exists (+1/-1 per tet).
std::optional<std::vector<int>> orientation(const Triangulation& tri);
/// True iff the tetrahedra admit a consistent orientation. Throws
/// InvalidComplex on complexes with reversed edges or bad vertex links.
bool is_orientable(const Triangulation& tri);

/// The boundary 2-complex with its cells labelled by interior classes.
struct BoundarySurface {
  struct Triangle {
    FacetRef facet;
    std::array<int, 3> corners{};   ///< local vertex labels, ascending
    std::array<int, 3> vertices{};  ///< vertex classes of the corners
    std::array<int, 3> edges{};     ///< edge class opposite each corner
  };
  std::vector<Triangle> triangles;
  std::vector<int> edge_classes;    ///< distinct edge classes on the boundary, ascending
  std::vector<int> vertex_classes;  ///< distinct vertex classes on the boundary, ascending

  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int edge_count() const { return static_cast<int>(edge_classes.size()); }
  int vertex_count() const { return static_cast<int>(vertex_classes.size()); }
  int euler_char() const { return vertex_count() - edge_count() + triangle_count(); }
  int component_count = 0;
  bool orientable = true;
};

BoundarySurface boundary_surface(const Triangulation& tri);

/// Connected sum along tetrahedron a of t1 and tetrahedron b of t2.
///
/// The result lists t1's tetrahedra (minus a) in order, then t2's (minus b).
Triangulation connected_sum(const Triangulation& t1, int a, const Triangulation& t2, int b);

}  // namespace twkit
