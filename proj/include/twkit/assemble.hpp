#pragma once

#include <vector>

#include "twkit/blocks.hpp"
#include "twkit/multigraph.hpp"
#include "twkit/spec_io.hpp"

namespace twkit {

struct SfsOptions {
  /// Realize (2,±1) fibers by folding the docking site onto itself instead of
  /// attaching a layered solid torus. A fold gives (2, site_sign); the other
  /// sign is folded when an unfolded fiber can absorb the shift.
  /// Throws PreconditionViolated where the fold is not available.
  bool fold_two_fibers = false;
};

/// Core assembly A_r with one layered solid torus per fiber; r = 0 uses A_1
/// with a trivial fill.
Triangulation sfs_over_sphere(const SfsSpec& spec, SfsOptions options = {});

/// Core assembly with g Möbius modules on the first g core units, then the
/// fiber tori. When fewer than two fibers are given, the assembly has g + 2
/// sites and the spare ones are filled trivially.
Triangulation sfs_over_nonorientable(int g, const std::vector<Fiber>& fibers);

/// Either base, dispatching on spec.base.
Triangulation sfs(const SfsSpec& spec);

/// Layered solid torus closed by folding its boundary; |H1| = p.
/// p = 0 gives S2 x S1 (q must then be ±1). Throws NotCoprime.
Triangulation lens_space(long p, long q);

/// Tree of Seifert pieces. Arc words layer onto the docking site at u before
/// the two sites are identified. Throws NotATree, SiteExhausted,
/// NonSimplicialClosure.
Triangulation graph_manifold(const GraphManifoldSpec& spec);

struct FlipWord {
  int genus = 1;
  /// Each entry indexes the current boundary edge classes in ascending order.
  std::vector<int> flips;
  /// Which of the valid closing isomorphisms to use, in enumeration order.
  int closure = 0;
};

struct FlipWordResult {
  Triangulation tri;
  LinearOrdering ordering;
};

/// Handlebody T', one layered tetrahedron per flip, and a copy T'' glued on
/// by a simplicial isomorphism of the boundaries. Throws BadFlipIndex,
/// NonSimplicialClosure.
FlipWordResult layered_from_flip_word(const FlipWord& w);

/// Every gluing of the boundary of tetrahedra [0, split) onto the boundary of
/// [split, n) by a simplicial isomorphism that yields a closed orientable
/// 3-manifold, in a fixed enumeration order.
std::vector<Triangulation> simplicial_closures(const Triangulation& tri, int split);

/// Number of orientation-compatible simplicial closures for a flip word.
int closure_count(const FlipWord& w);

/// k x k x 1 cubes, each split into six tetrahedra around its main diagonal.
/// Throws BadK for k < 2.
Triangulation grid_ball(int k);

/// The k x k grid obtained from the dual of grid_ball(k) by contracting the
/// six tetrahedra of each cube.
Multigraph grid_ball_cube_minor(int k);

}  // namespace twkit
