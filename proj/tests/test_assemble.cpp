#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "twkit/algebra.hpp"
#include "twkit/assemble.hpp"
#include "twkit/error.hpp"
#include "twkit/width.hpp"

using namespace twkit;

namespace {

oracle::Big expected_order(const std::vector<Fiber>& fibers) {
  oracle::Big sum = 0;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    oracle::Big t = fibers[i].b;
    for (std::size_t j = 0; j < fibers.size(); ++j)
      if (j != i) t *= fibers[j].a;
    sum += t;
  }
  return abs(sum);
}

void closed_orientable(const Triangulation& t) {
  CHECK(validate(t).status == Validity::ClosedManifold);
  CHECK(is_orientable(t));
}

}  // namespace

TEST_SUITE("assemble") {
  TEST_CASE("Poincaré sphere") {
    const auto t = sfs(parse_sfs("sfs sphere (2,1) (3,1) (5,-4)"));
    closed_orientable(t);
    CHECK(oracle::dual_h1(t).free_rank == 0);
    CHECK(oracle::dual_h1(t).torsion.empty());
    CHECK(oracle::treewidth_at_most_two(dual_graph(t)));
  }

  TEST_CASE("sfs over the sphere: homology order") {
    for (std::string spec : {"sfs sphere (2,1) (2,1) (2,-1)", "sfs sphere (3,1) (5,2)", "sfs sphere (3,2) (5,-2) (7,3) (2,1)",
                             "sfs sphere (3,1)", "sfs sphere (7,-3) (4,1) (5,2) (3,-1)"}) {
      CAPTURE(spec);
      const auto s = parse_sfs(spec);
      const auto t = sfs(s);
      closed_orientable(t);
      const auto o = oracle::dual_h1(t);
      CHECK(o.free_rank == 0);
      CHECK(o.torsion_order() == expected_order(s.fibers));
    }
    const auto t = sfs(parse_sfs("sfs sphere"));
    closed_orientable(t);
    CHECK(first_homology(t) == Homology{1, {}});
  }

  TEST_CASE("sfs over non-orientable bases") {
    CHECK(first_homology(sfs(parse_sfs("sfs nonor:1"))).torsion_order() == 4);
    for (int g = 1; g <= 3; ++g)
      for (int r = 0; r <= 4; ++r) {
        CAPTURE(g);
        CAPTURE(r);
        std::vector<Fiber> f;
        for (int i = 0; i < r; ++i) f.push_back({2 + i, 1});
        const auto t = sfs_over_nonorientable(g, f);
        closed_orientable(t);
        CHECK(oracle::treewidth_at_most_two(dual_graph(t)));
        const auto h = first_homology(t);
        CHECK(h.free_rank == g - 1);  // base contributes g - 1 free generators
        CHECK(h == Homology{oracle::dual_h1(t).free_rank, oracle::dual_h1(t).torsion});
      }
  }

  TEST_CASE("(2,1) fibers by folding a site") {
    for (std::string spec : {"sfs sphere (2,1) (3,1) (5,-4)", "sfs sphere (2,1) (2,1) (2,-1)", "sfs sphere (2,-1) (3,2) (7,1)",
                             "sfs sphere (3,1) (2,1)", "sfs sphere (5,2) (7,-3) (2,1) (2,-1)", "sfs sphere (2,1) (2,1)"}) {
      CAPTURE(spec);
      const auto s = parse_sfs(spec);
      const auto folded = sfs_over_sphere(s, {.fold_two_fibers = true});
      const auto layered = sfs_over_sphere(s);
      closed_orientable(folded);
      CHECK(folded.size() <= layered.size());  // a sign shift can grow another fiber
      CHECK(first_homology(folded) == first_homology(layered));
      CHECK(oracle::dual_h1(folded).torsion_order() == expected_order(s.fibers));
      CHECK(oracle::treewidth_at_most_two(dual_graph(folded)));
    }
    const auto poincare = parse_sfs("sfs sphere (2,1) (3,1) (5,-4)");
    CHECK(sfs_over_sphere(poincare, {.fold_two_fibers = true}).size() < sfs_over_sphere(poincare).size());
  }

  TEST_CASE("lens spaces") {
    for (long p = 0; p <= 20; ++p)
      for (long q = 0; q <= std::max(1L, p); ++q) {
        if (std::gcd(p, q) != 1) continue;
        CAPTURE(p);
        CAPTURE(q);
        const auto t = lens_space(p, q);
        closed_orientable(t);
        const auto o = oracle::dual_h1(t);
        if (p == 0) {
          CHECK(o.free_rank == 1);
        } else {
          CHECK(o.free_rank == 0);
          CHECK(o.torsion_order() == p);
        }
        CHECK(classify_thick_path(dual_graph(t)).kind != ThickPathKind::NotTw1);
      }
    CHECK_THROWS_AS(lens_space(6, 4), Error);
  }

  TEST_CASE("graph manifolds") {
    const auto two = graph_manifold(parse_graph_manifold(
        "gm\nnode sfs sphere (2,1) (3,1)\nnode sfs sphere (2,1) (3,-1)\narc 0 1\nend\n"));
    closed_orientable(two);
    CHECK(treewidth_exact(dual_graph(two)).width == 2);
    const auto path = graph_manifold(parse_graph_manifold(
        "gm\nnode sfs sphere (2,1)\nnode sfs sphere (3,1) (5,2)\nnode sfs sphere (2,1) (7,3)\narc 0 1\narc 1 2 0 1\nend\n"));
    closed_orientable(path);
    CHECK(oracle::treewidth_at_most_two(dual_graph(path)));
    CHECK(first_homology(path) == Homology{oracle::dual_h1(path).free_rank, oracle::dual_h1(path).torsion});
    CHECK_THROWS_AS(graph_manifold(parse_graph_manifold("gm\nnode sfs sphere\nnode sfs sphere\narc 0 1\narc 1 0\nend\n")), Error);
    CHECK_THROWS_AS(graph_manifold(parse_graph_manifold("gm\nnode sfs sphere\nnode sfs sphere\nnode sfs sphere\narc 0 1\nend\n")), Error);
    CHECK_THROWS_AS(graph_manifold(parse_graph_manifold("gm\nnode sfs sphere\nnode sfs sphere\narc 0 1 7\nend\n")), Error);
  }

  TEST_CASE("flip words") {
    FlipWord empty;
    empty.genus = 1;
    const auto r = layered_from_flip_word(empty);
    closed_orientable(r.tri);
    CHECK(r.tri.size() == 2);
    CHECK(r.ordering.width <= 2);
    CHECK(classify_thick_path(dual_graph(r.tri)).kind != ThickPathKind::NotTw1);

    std::mt19937 rng(4);
    int found = 0;
    for (int it = 0; it < 200 && found < 3; ++it) {
      FlipWord w;
      w.genus = 2;
      for (int i = 0; i < 5; ++i) w.flips.push_back(static_cast<int>(rng() % 9));
      if (closure_count(w) == 0) continue;
      const auto res = layered_from_flip_word(w);
      closed_orientable(res.tri);
      CHECK(res.tri.size() == 13);
      CHECK(oracle::is_permutation_of_nodes(dual_graph(res.tri), res.ordering.order));
      CHECK(oracle::order_width(dual_graph(res.tri), res.ordering.order) == res.ordering.width);
      CHECK(res.ordering.width <= 6);
      ++found;
    }
    CHECK(found == 3);
    FlipWord bad;
    bad.genus = 2;
    bad.flips = {42};
    CHECK_THROWS_AS(layered_from_flip_word(bad), Error);
  }

  TEST_CASE("grid balls") {
    for (int k = 2; k <= 3; ++k) {
      const auto t = grid_ball(k);
      CHECK(t.size() == 6 * k * k);
      CHECK(validate(t).status == Validity::BoundedManifold);
      const auto bs = oracle::boundary_stats(t);
      CHECK(bs.euler() == 2);  // a 2-sphere
      for (const auto& l : vertex_link_classes(t)) CHECK((l.is_disk() || l.is_sphere()) == true);
      // the six tetrahedra of each cube are connected in the dual
      const Multigraph d = dual_graph(t);
      for (int c = 0; c < k * k; ++c) {
        Multigraph inner(6);
        for (auto [u, v] : d.arcs)
          if (u / 6 == c && v / 6 == c) inner.add_arc(u % 6, v % 6);
        CHECK(is_connected(inner));
      }
      const Multigraph minor = grid_ball_cube_minor(k);
      CHECK(minor.node_count == k * k);
      CHECK(oracle::simple_arcs(minor).size() == static_cast<std::size_t>(2 * k * (k - 1)));
      CHECK(oracle::treewidth(minor) == k);
    }
    CHECK(treewidth_exact(dual_graph(grid_ball(2))).width >= 2);
    CHECK_THROWS_AS(grid_ball(1), Error);
  }
}
