#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "twkit/algebra.hpp"
#include "twkit/blocks.hpp"
#include "twkit/error.hpp"

using namespace twkit;

namespace {

// |image of each boundary edge class| in H1(solid torus) = Z, from the Smith
// transform of the 2-boundary matrix. For a solid torus this is the number of
// times the edge meets a meridian disc.
std::map<int, long> meridian_weights(const Triangulation& tri) {
  const auto sk = compute_skeleton(tri);
  REQUIRE(sk.vertex_count == 1);  // then every edge is a cycle
  const auto s = smith_normal_form(boundary_matrix_2(sk));
  // rows of U beyond the nonzero diagonal span the free quotient
  const int r = static_cast<int>(s.nonzero_diagonal().size());
  int free_row = -1;
  for (int i = 0; i < s.d.rows(); ++i) {
    if (i < r && s.d(i, i) == 1) continue;
    REQUIRE(i >= r);  // torsion-free
    REQUIRE(free_row < 0);
    free_row = i;
  }
  REQUIRE(free_row >= 0);
  std::map<int, long> out;
  for (int e = 0; e < sk.edge_count; ++e)
    if (sk.edge_boundary[static_cast<std::size_t>(e)]) out[e] = static_cast<long>(abs(s.u(free_row, e)));
  return out;
}

// The dual graph of a layered solid torus: a path of double arcs with a
// single loop at the far end.
bool loop_at_end_of_double_path(const Multigraph& g) {
  std::map<std::pair<int, int>, int> mult;
  for (auto [u, v] : g.arcs) ++mult[{std::min(u, v), std::max(u, v)}];
  int loops = 0, loop_node = -1;
  for (auto [k, m] : mult)
    if (k.first == k.second) {
      loops += m;
      loop_node = k.first;
    } else if (m != 2) {
      return false;
    }
  if (loops != 1 || !oracle::simple_is_path(g)) return false;
  int deg = 0;
  for (auto [k, m] : mult)
    if (k.first != k.second && (k.first == loop_node || k.second == loop_node)) ++deg;
  return g.node_count == 1 || deg == 1;
}

}  // namespace

TEST_SUITE("blocks") {
  TEST_CASE("layering flips an edge and keeps the boundary size") {
    Triangulation t = lst(1, 2, -3).tri;
    const auto before = boundary_surface(t);
    const int e = before.edge_classes[0];
    const int n = layer_on_edge_in_place(t, e);
    CHECK(n == 1);
    const auto after = boundary_surface(t);
    CHECK(after.triangle_count() == before.triangle_count());
    const auto sk = compute_skeleton(t);
    CHECK_FALSE(sk.edge_boundary[static_cast<std::size_t>(sk.edge(n, 2, 3))]);  // e is now interior
    CHECK(sk.edge_boundary[static_cast<std::size_t>(sk.edge(n, 0, 1))]);
    CHECK(validate(t).status == Validity::BoundedManifold);
    CHECK_THROWS_AS(layer_on_edge(t, sk.edge(n, 2, 3)), Error);
    CHECK_THROWS_AS(layer_on_edge(pentachoron_boundary(), 0), Error);
  }

  TEST_CASE("layered solid tori: type, size, weights") {
    struct Case {
      long p, q, r;
      int tets;
    };
    for (const Case c : {Case{1, 2, -3, 1}, {0, 1, 1, 3}, {1, 1, -2, 2}, {3, -5, 2, 2}, {5, 8, -13, 4}, {2, 5, -7, 3}, {4, 7, -11, 4}}) {
      CAPTURE(c.p);
      CAPTURE(c.q);
      const auto s = lst(c.p, c.q, c.r);
      CHECK(s.tri.size() == c.tets);
      CHECK(validate(s.tri).status == Validity::BoundedManifold);
      CHECK(is_orientable(s.tri));
      const auto h = first_homology(s.tri);
      CHECK(h == Homology{1, {}});
      const auto bs = oracle::boundary_stats(s.tri);
      CHECK(bs.triangles == 2);
      CHECK(bs.edges == 3);
      CHECK(bs.vertices == 1);
      const auto weights = meridian_weights(s.tri);
      const auto sk = compute_skeleton(s.tri);
      for (int k = 0; k < 3; ++k) {
        const long expect = std::labs(std::array<long, 3>{c.p, c.q, c.r}[static_cast<std::size_t>(k)]);
        CHECK(s.weights[static_cast<std::size_t>(k)] == expect);
        CHECK(weights.at(s.edges[static_cast<std::size_t>(k)].class_in(sk)) == expect);
      }
      CHECK(loop_at_end_of_double_path(dual_graph(s.tri)));
    }
    CHECK_THROWS_AS(lst(1, 1, 1), Error);
    CHECK_THROWS_AS(lst(2, 4, -6), Error);
  }

  TEST_CASE("LST(0,1,1) matches the reference table") {
    CHECK(lst(0, 1, 1).tri == from_face_gluings(3, oracle::kLst011));
  }

  TEST_CASE("iterated layering keeps the thick-path shape") {
    Triangulation t = lst(1, 2, -3).tri;
    for (int k = 0; k < 6; ++k) {
      const auto bs = boundary_surface(t);
      // cycle through the boundary edges
      layer_on_edge_in_place(t, bs.edge_classes[static_cast<std::size_t>(k % 3)]);
      CHECK(validate(t).status == Validity::BoundedManifold);
      CHECK(first_homology(t) == Homology{1, {}});
      CHECK(loop_at_end_of_double_path(dual_graph(t)));
    }
  }

  TEST_CASE("snapped ball") {
    const auto t = snapped_ball();
    CHECK(t.size() == 1);
    CHECK(validate(t).status == Validity::BoundedManifold);
    const Multigraph d = dual_graph(t);
    CHECK(d.arcs.size() == 1);
    CHECK(d.loop_count() == 1);
  }

  TEST_CASE("core unit and assemblies") {
    const auto a3 = core_assembly(3);
    CHECK(a3.tri == from_face_gluings(3, oracle::kCoreA3));
    CHECK(a3.sites.size() == 3);
    for (int r = 1; r <= 8; ++r) {
      CAPTURE(r);
      const auto c = core_assembly(r);
      CHECK(static_cast<int>(c.sites.size()) == r);
      CHECK(validate(c.tri).status == Validity::BoundedManifold);
      CHECK(is_orientable(c.tri));
      CHECK(oracle::boundary_stats(c.tri).triangles == 2 * r);
      CHECK(oracle::treewidth(dual_graph(c.tri)) == 2);
      const auto sk = compute_skeleton(c.tri);
      for (const auto& site : c.sites) {
        CHECK(site.diagonal(sk) != site.horizontal(sk));
        CHECK(site.vertical(sk, 0) != site.diagonal(sk));
      }
    }
    CHECK_THROWS_AS(core_assembly(0), Error);
  }

  TEST_CASE("Möbius module") {
    const auto m = moebius_module();
    CHECK(m.tri == from_face_gluings(3, oracle::kMoebius));
    CHECK(validate(m.tri).status == Validity::BoundedManifold);
    CHECK(is_orientable(m.tri));
    const Multigraph d = dual_graph(m.tri);
    CHECK(d.node_count == 3);
    CHECK(d.arcs.size() == 5);
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : d.arcs) ++mult[{std::min(u, v), std::max(u, v)}];
    std::vector<int> bundles;
    for (auto [k, m] : mult) bundles.push_back(k.first == k.second ? -m : m);
    std::sort(bundles.begin(), bundles.end());
    CHECK(bundles == std::vector<int>{1, 2, 2});  // a triangle with two double edges
    CHECK(oracle::treewidth(d) == 2);
  }

  TEST_CASE("attaching fibers") {
    auto core = core_assembly(3);
    attach_fiber(core.tri, core.sites[0], {2, 1});
    attach_fiber(core.tri, core.sites[1], {3, 1});
    attach_fiber(core.tri, core.sites[2], {5, -4});
    CHECK(validate(core.tri).status == Validity::ClosedManifold);
    CHECK(first_homology(core.tri) == Homology{});
    auto other = core_assembly(3);
    CHECK_THROWS_AS(attach_fiber(other.tri, other.sites[0], {4, 2}), Error);
  }

  TEST_CASE("pentachoron boundary") {
    const auto t = pentachoron_boundary();
    CHECK(t.size() == 5);
    CHECK(validate(t).status == Validity::ClosedManifold);
    CHECK(compute_skeleton(t).vertex_count == 5);
    CHECK(oracle::dual_h1(t).free_rank == 0);
  }

  TEST_CASE("layered handlebodies") {
    for (int g = 1; g <= 6; ++g) {
      CAPTURE(g);
      const auto h = layered_handlebody(g);
      CHECK(h.tri.size() == 3 * g - 2);
      CHECK(validate(h.tri).status == Validity::BoundedManifold);
      CHECK(is_orientable(h.tri));
      const auto bs = oracle::boundary_stats(h.tri);
      CHECK(bs.triangles == 4 * g - 2);
      CHECK(bs.euler() == 2 - 2 * g);
      CHECK(bs.vertices == 1);
      CHECK(first_homology(h.tri) == Homology{g, {}});
      CHECK(oracle::order_width(dual_graph(h.tri), h.layering_order.order) == h.layering_order.width);
    }
    CHECK_THROWS_AS(layered_handlebody(0), Error);
  }
}
