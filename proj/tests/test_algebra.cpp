#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twkit/algebra.hpp"
#include "twkit/assemble.hpp"

using namespace twkit;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int spread) {
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % static_cast<unsigned>(2 * spread + 1)) - spread;
  return m;
}

// Product computed entry by entry, independent of IntMatrix::operator*.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      BigInt s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

BigInt det(IntMatrix m) {
  // fraction-free Bareiss elimination
  const int n = m.rows();
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("smith normal form examples") {
    const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
    CHECK(smith_normal_form(IntMatrix(2, 3)).d == IntMatrix(2, 3));
    CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
  }

  TEST_CASE("smith normal form: U A V = D, unimodular transforms, divisibility") {
    std::mt19937 rng(31);
    for (int it = 0; it < 150; ++it) {
      const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
      const IntMatrix a = random_matrix(rng, r, c, it < 75 ? 3 : 40);
      const auto s = smith_normal_form(a);
      CHECK(multiply(multiply(s.u, a), s.v) == s.d);
      CHECK(det(s.u) * det(s.u) == 1);
      CHECK(det(s.v) * det(s.v) == 1);
      const auto diag = s.nonzero_diagonal();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
          if (i != j) CHECK(s.d(i, j) == 0);
      for (std::size_t i = 0; i + 1 < diag.size(); ++i) CHECK(diag[i + 1] % diag[i] == 0);
      // independent oracle on the cokernel of the transpose (relations as rows)
      std::vector<std::vector<oracle::Big>> rows(static_cast<std::size_t>(r), std::vector<oracle::Big>(static_cast<std::size_t>(c)));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
      const auto ab = oracle::cokernel(rows, c);
      CHECK(ab.free_rank == c - rank(a));
      std::vector<BigInt> nontrivial;
      for (const auto& d : diag)
        if (d > 1) nontrivial.push_back(d);
      CHECK(ab.torsion == nontrivial);
    }
  }

  TEST_CASE("square matrices: product of invariant factors is |det|") {
    std::mt19937 rng(8);
    for (int it = 0; it < 60; ++it) {
      const int n = 1 + static_cast<int>(rng() % 5);
      const IntMatrix a = random_matrix(rng, n, n, 9);
      const auto d = det(a);
      const auto f = invariant_factors(a);
      if (d == 0) {
        CHECK(static_cast<int>(f.size()) < n);
        CHECK_FALSE(is_unimodular(a));
      } else {
        BigInt p = 1;
        for (const auto& x : f) p *= x;
        CHECK(p == abs(d));
        CHECK(is_unimodular(a) == (abs(d) == 1));
      }
    }
  }

  TEST_CASE("pivots beyond 64 bits") {
    IntMatrix a{{1, 0}, {0, 1}};
    a(0, 0) = BigInt("123456789012345678901234567890");
    a(1, 1) = BigInt("987654321098765432109876543210");
    const auto f = invariant_factors(a);
    REQUIRE(f.size() == 2);
    CHECK(f[0] * f[1] == a(0, 0) * a(1, 1));
    CHECK(f[1] % f[0] == 0);
  }

  TEST_CASE("first homology against the dual-complex oracle") {
    auto same = [](const Triangulation& t) {
      const auto h = first_homology(t);
      const auto o = oracle::dual_h1(t);
      CHECK(h.free_rank == o.free_rank);
      CHECK(h.torsion == o.torsion);
    };
    same(lens_space(7, 2));
    same(lens_space(0, 1));
    same(lens_space(12, 5));
    same(lst(5, 8, -13).tri);
    same(moebius_module().tri);
    same(sfs(parse_sfs("sfs sphere (2,1) (3,1) (5,-4)")));
    same(sfs(parse_sfs("sfs nonor:2 (2,1) (3,1)")));
    same(sfs(parse_sfs("sfs nonor:1")));
    same(layered_handlebody(3).tri);
    same(pentachoron_boundary());
  }

  TEST_CASE("first homology examples") {
    const auto l = first_homology(lens_space(7, 2));
    CHECK(l.free_rank == 0);
    CHECK(l.torsion == std::vector<BigInt>{7});
    CHECK(first_homology(lens_space(0, 1)) == Homology{1, {}});
    CHECK(first_homology(sfs(parse_sfs("sfs sphere (2,1) (3,1) (5,-4)"))) == Homology{});
    CHECK(first_homology(layered_handlebody(3).tri).free_rank == 3);
    CHECK(Homology{1, {2, 4}}.str() == "Z + Z/2 + Z/4");
    CHECK(Homology{}.str() == "0");
  }

  TEST_CASE("sfs_h1_order") {
    CHECK(sfs_h1_order(parse_sfs("sfs sphere (2,1) (3,1) (5,-4)")) == BigInt(1));
    CHECK(sfs_h1_order(parse_sfs("sfs sphere (2,1) (2,1) (2,-1)")) == BigInt(4));
    CHECK_FALSE(sfs_h1_order(parse_sfs("sfs sphere")).has_value());
  }
}
