#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twkit/perm4.hpp"

namespace twkit {

/// A facet of a tetrahedron: facet f is the triangle opposite vertex f.
struct FacetRef {
  int tet = 0;
  int facet = 0;
  friend bool operator==(const FacetRef&, const FacetRef&) = default;
  friend auto operator<=>(const FacetRef&, const FacetRef&) = default;
};

/// Where a facet is glued to, and how vertex labels are carried across.
struct Gluing {
  int tet = 0;
  int facet = 0;
  Perm4 perm;
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// A generalized triangulation: abstract tetrahedra with some facets paired.
///
/// The gluing map is kept as an involution: whenever facet (i,f) is glued to
/// (j,g) through p, facet (j,g) is glued to (i,f) through p^-1 and p(f) = g.
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(int tetrahedra) : adj_(static_cast<std::size_t>(tetrahedra)) {}

  int size() const { return static_cast<int>(adj_.size()); }
  bool empty() const { return adj_.empty(); }

  /// Appends a fresh unglued tetrahedron and returns its index.
  int add_tetrahedron();
  /// Appends all tetrahedra of other (with their gluings); returns index offset.
  int insert(const Triangulation& other);

  /// Glues facet f of tet i to facet g of tet j; perm maps labels of i to labels of j.
  void glue(int i, int f, int j, int g, Perm4 perm);
  /// Same, with the target facet implied by perm(f).
  void glue(int i, int f, int j, Perm4 perm) { glue(i, f, j, perm[f], perm); }
  void unglue(int i, int f);

  const std::optional<Gluing>& adjacent(int i, int f) const;
  bool is_glued(int i, int f) const { return adjacent(i, f).has_value(); }

  int glued_pair_count() const;
  int boundary_facet_count() const;
  bool is_closed() const { return boundary_facet_count() == 0; }

  /// Copy with tetrahedron i removed (its neighbours' facets become free).
  Triangulation without(int i) const;
  /// Relabels tetrahedra: new index of old tet i is order_to_new[i].
  Triangulation renumbered(const std::vector<int>& old_to_new) const;
  /// Applies a vertex relabelling sigma to tetrahedron i (gluings follow).
  void relabel_tetrahedron(int i, Perm4 sigma);

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  void check_index(int i, int f) const;
  std::vector<std::array<std::optional<Gluing>, 4>> adj_;
};

/// Free-function form of glue(): returns the updated copy.
Triangulation glue_facets(Triangulation tri, int i, int f, int j, int g, Perm4 perm);

/// A single face gluing written in the "Di(abc) -> Dj(xyz)" notation.
struct FaceGluingSpec {
  int tet_from = 0;
  int facet_from = 0;
  int tet_to = 0;
  int facet_to = 0;
  Perm4 perm;
};

/// Parses e.g. "Δ0(023) ↦ Δ1(013)", "D0(023) -> D1(013)", "T0(123) |-> T1(123)".
FaceGluingSpec parse_face_gluing(std::string_view text);
/// Renders a gluing in ASCII notation, e.g. "D0(023) -> D1(013)".
std::string format_face_gluing(int tet_from, int facet_from, int tet_to, Perm4 perm);

/// Builds a triangulation with n tetrahedra from gluings written as "D0(023) -> D1(013)".
Triangulation from_face_gluings(int tetrahedra, const std::vector<std::string_view>& gluings);

}  // namespace twkit
