#pragma once

#include <string>
#include <string_view>

#include "twkit/triangulation.hpp"

namespace twkit {

// Gluing-table text format:
//
//   tets N
//   0: e0 e1 e2 e3
//   ...
//
// where ek is "-" for a boundary facet or "j(wxyz)" with wxyz the images of
// 0123 under the gluing permutation of facet k. Canonical output uses single
// spaces and LF line endings, so write(read(s)) == s for canonical s.

std::string write_gluing_table(const Triangulation& tri);
Triangulation read_gluing_table(std::string_view text);

/// Python script for Regina built from newSimplex/join calls only, joins in
/// ascending (tet, facet) order, each glued pair once.
std::string write_regina_script(const Triangulation& tri);
/// Reads back the join lines written by write_regina_script.
Triangulation read_regina_script(std::string_view text);

/// One "Di(abc) -> Dj(xyz)" line per glued pair, ascending (tet, facet).
std::string write_face_gluings(const Triangulation& tri);

}  // namespace twkit
