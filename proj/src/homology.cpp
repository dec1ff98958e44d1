#include <sstream>

#include "twkit/algebra.hpp"
#include "twkit/error.hpp"

namespace twkit {

IntMatrix boundary_matrix_1(const SkeletonSummary& sk) {
  IntMatrix m(sk.vertex_count, sk.edge_count);
  for (int e = 0; e < sk.edge_count; ++e) {
    const auto [tet, local] = sk.edge_rep[static_cast<std::size_t>(e)];
    const auto [a, b] = kEdgeVertices[static_cast<std::size_t>(local)];
    m(sk.vertex(tet, b), e) += 1;
    m(sk.vertex(tet, a), e) -= 1;
  }
  return m;
}

IntMatrix boundary_matrix_2(const SkeletonSummary& sk) {
  IntMatrix m(sk.edge_count, sk.triangle_count);
  for (int t = 0; t < sk.triangle_count; ++t) {
    const auto [tet, f] = sk.triangle_rep[static_cast<std::size_t>(t)];
    std::array<int, 3> c{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
      if (v != f) c[static_cast<std::size_t>(k++)] = v;
    // d[c0 c1 c2] = [c1 c2] - [c0 c2] + [c0 c1]
    m(sk.edge(tet, c[1], c[2]), t) += sk.edge_orientation(tet, c[1], c[2]);
    m(sk.edge(tet, c[0], c[2]), t) -= sk.edge_orientation(tet, c[0], c[2]);
    m(sk.edge(tet, c[0], c[1]), t) += sk.edge_orientation(tet, c[0], c[1]);
  }
  return m;
}

BigInt Homology::torsion_order() const {
  BigInt p = 1;
  for (const auto& t : torsion) p *= t;
  return p;
}

std::string Homology::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < free_rank; ++i) {
    out << (first ? "" : " + ") << 'Z';
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return first ? "0" : out.str();
}

Homology first_homology(const Triangulation& tri) {
  const auto report = validate(tri);
  if (!report.valid()) throw Error(ErrorKind::InvalidComplex, report.summary());
  const auto sk = compute_skeleton(tri);
  const int r1 = rank(boundary_matrix_1(sk));
  const auto factors = invariant_factors(boundary_matrix_2(sk));
  Homology h;
  h.free_rank = sk.edge_count - r1 - static_cast<int>(factors.size());
  for (const auto& f : factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

std::optional<BigInt> sfs_h1_order(const SfsSpec& spec) {
  if (spec.base != BaseSurface::Sphere) throw Error(ErrorKind::InvalidSpec, "order formula needs a sphere base");
  BigInt sum = 0;
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    BigInt term = spec.fibers[i].b;
    for (std::size_t j = 0; j < spec.fibers.size(); ++j)
      if (j != i) term *= spec.fibers[j].a;
    sum += term;
  }
  if (sum == 0) return std::nullopt;
  return abs(sum);
}

}  // namespace twkit
