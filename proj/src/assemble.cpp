#include "twkit/assemble.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "twkit/algebra.hpp"
#include "twkit/error.hpp"

namespace twkit {

namespace {

void require_sphere(const SfsSpec& spec) {
  spec.check();
  if (spec.base != BaseSurface::Sphere) throw Error(ErrorKind::InvalidSpec, "expected a sphere base");
}

void attach_moebius(Triangulation& tri, int unit) {
  const int o = tri.insert(moebius_module().tri);
  // T0(012) -> Δ2(201), T2(013) -> Δ0(013)
  tri.glue(o + 0, 3, 3 * unit + 2, 3, Perm4(2, 0, 1, 3));
  tri.glue(o + 2, 2, 3 * unit + 0, 2, Perm4());
}

}  // namespace

Triangulation sfs_over_sphere(const SfsSpec& spec, SfsOptions options) {
  require_sphere(spec);
  const int r = static_cast<int>(spec.fibers.size());
  if (r == 0) {
    auto core = core_assembly(1);
    attach_fiber(core.tri, core.sites[0], {1, 0});
    return core.tri;
  }
  auto core = core_assembly(r);
  std::vector<Fiber> fibers = spec.fibers;
  std::vector<bool> fold(fibers.size(), false);
  if (options.fold_two_fibers) {
    std::vector<int> sign(fibers.size());
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      sign[i] = site_sign(core.tri, core.sites[i]);
      fold[i] = fibers[i].a == 2 && fibers[i].b == sign[i];
    }
    // the fold realizes (2, sign); (2,b),(a',b') is the same space as (2,-b),(a',b'+b a')
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      if (fold[i] || fibers[i].a != 2 || fibers[i].b != -sign[i]) continue;
      // absorb into an unfolded fiber, sparing other (2,±1) fibers when possible
      std::optional<std::size_t> sink;
      for (std::size_t j = 0; j < fibers.size(); ++j) {
        if (j == i || fold[j]) continue;
        const bool foldable = fibers[j].a == 2 && std::labs(fibers[j].b) == 1;
        if (!sink || (!foldable && fibers[*sink].a == 2 && std::labs(fibers[*sink].b) == 1)) sink = j;
      }
      if (!sink) continue;
      fibers[*sink].b += fibers[i].b * fibers[*sink].a;
      fibers[i].b = -fibers[i].b;
      fold[i] = true;
    }
  }
  for (int i = 0; i < r; ++i) {
    const Fiber& f = fibers[static_cast<std::size_t>(i)];
    const DockingSite& site = core.sites[static_cast<std::size_t>(i)];
    if (fold[static_cast<std::size_t>(i)])
      fold_site(core.tri, site);
    else
      attach_fiber(core.tri, site, f);
  }
  return core.tri;
}

Triangulation sfs_over_nonorientable(int g, const std::vector<Fiber>& fibers) {
  SfsSpec spec{BaseSurface::NonOrientable, g, fibers};
  spec.check();
  const int r = static_cast<int>(fibers.size());
  const int n = r >= 2 ? r + g : g + 2;
  auto core = core_assembly(n);
  for (int j = 0; j < g; ++j) attach_moebius(core.tri, j);
  for (int i = g; i < n; ++i) {
    const int k = i - g;
    const Fiber f = k < r ? fibers[static_cast<std::size_t>(k)] : Fiber{1, 0};
    attach_fiber(core.tri, core.sites[static_cast<std::size_t>(i)], f);
  }
  return core.tri;
}

Triangulation sfs(const SfsSpec& spec) {
  spec.check();
  if (spec.base == BaseSurface::Sphere) return sfs_over_sphere(spec);
  return sfs_over_nonorientable(spec.genus, spec.fibers);
}

Triangulation lens_space(long p, long q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (std::gcd(p, std::labs(q)) != 1)
    throw Error(ErrorKind::NotCoprime, "lens space (" + std::to_string(p) + "," + std::to_string(q) + ") needs gcd(p,q) = 1");
  // L(p,q) = L(p,-q): fold LST(q, p - 2q, p - q) with 0 <= q <= p/2, which
  // identifies the two edges of weight q and p - q.
  long qq = p == 0 ? 1 : ((q % p) + p) % p;
  if (p > 0 && 2 * qq > p) qq = p - qq;
  std::vector<LayeredSolidTorus> arms;
  if (p == 0)
    arms.push_back(lst(1, 1, -2));
  else if (p == 1)
    arms.push_back(lst(0, 1, -1));
  else
    arms.push_back(lst(qq, p - 2 * qq, -(p - qq)));
  for (const auto& arm : arms) {
    const auto sk = compute_skeleton(arm.tri);
    const int fixed = arm.edges[2].class_in(sk);
    // Maps facet 3 (012) onto facet 2 (013).
    std::vector<Perm4> candidates;
    std::array<int, 3> images{0, 1, 3};
    do candidates.push_back(Perm4(images[0], images[1], images[2], 2));
    while (std::next_permutation(images.begin(), images.end()));
    // Prefer maps that keep the fixed edge in place.
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Perm4& x, const Perm4& y) {
      auto keeps = [&](const Perm4& m) {
        for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
          if (sk.edge(0, a, b) == fixed && sk.edge(0, m[a], m[b]) == fixed) return 0;
        return 1;
      };
      return keeps(x) < keeps(y);
    });
    for (const auto& m : candidates) {
      Triangulation tri = arm.tri;
      tri.glue(0, 3, 0, 2, m);
      const auto report = validate(tri);
      if (report.status != Validity::ClosedManifold || !orientation(tri)) continue;
      const auto h = first_homology(tri);
      const bool ok = p == 0 ? h.free_rank == 1 && h.torsion.empty() : h.free_rank == 0 && h.torsion_order() == p;
      if (ok) return tri;
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "no closing fold realizes lens space (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

Triangulation grid_ball(int k) {
  if (k < 2) throw Error(ErrorKind::BadK, "grid ball needs k >= 2, got " + std::to_string(k));
  auto id = [k](int x, int y, int z) { return (x * (k + 1) + y) * 2 + z; };
  std::vector<std::array<int, 4>> simplices;
  std::array<int, 3> axes{0, 1, 2};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::sort(axes.begin(), axes.end());
      do {
        std::array<int, 3> p{i, j, 0};
        std::array<int, 4> s{};
        s[0] = id(p[0], p[1], p[2]);
        for (int step = 0; step < 3; ++step) {
          ++p[static_cast<std::size_t>(axes[static_cast<std::size_t>(step)])];
          s[static_cast<std::size_t>(step + 1)] = id(p[0], p[1], p[2]);
        }
        simplices.push_back(s);
      } while (std::next_permutation(axes.begin(), axes.end()));
    }
  return from_simplices(simplices);
}

Multigraph grid_ball_cube_minor(int k) {
  const Multigraph dual = dual_graph(grid_ball(k));
  Multigraph out(k * k);
  for (auto [u, v] : dual.arcs)
    if (u / 6 != v / 6) out.add_arc(u / 6, v / 6);
  return simplify(out);
}

}  // namespace twkit
