#include "twkit/error.hpp"
#include "twkit/skeleton.hpp"

namespace twkit {

namespace {

void check_summand(const Triangulation& t, int a, const char* which) {
  if (a < 0 || a >= t.size())
    throw Error(ErrorKind::IndexOutOfRange, std::string(which) + ": no tetrahedron " + std::to_string(a));
  if (!t.is_closed()) throw Error(ErrorKind::NotClosed, std::string(which) + " is not closed");
  const auto sk = compute_skeleton(t);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (sk.vertex(a, u) == sk.vertex(a, v))
        throw Error(ErrorKind::PreconditionViolated,
                    std::string(which) + ": tetrahedron " + std::to_string(a) + " has identified vertices");
  for (int f = 0; f < 4; ++f)
    if (t.adjacent(a, f)->tet == a)
      throw Error(ErrorKind::PreconditionViolated,
                  std::string(which) + ": tetrahedron " + std::to_string(a) + " is glued to itself");
}

}  // namespace

Triangulation connected_sum(const Triangulation& t1, int a, const Triangulation& t2, int b) {
  check_summand(t1, a, "first summand");
  check_summand(t2, b, "second summand");

  // Label x of the removed a is matched with label psi(x) of the removed b.
  for (const Perm4 psi : {Perm4(), transposition(0, 1)}) {
    Triangulation out = t1.without(a);
    const int offset = out.insert(t2.without(b));
    auto shift1 = [&](int t) { return t > a ? t - 1 : t; };
    auto shift2 = [&](int t) { return offset + (t > b ? t - 1 : t); };
    for (int f = 0; f < 4; ++f) {
      const Gluing g1 = *t1.adjacent(a, f);
      const Gluing g2 = *t2.adjacent(b, psi[f]);
      // neighbour1 --g1^-1--> a --psi--> b --g2--> neighbour2
      const Perm4 p = g2.perm * psi * g1.perm.inverse();
      out.glue(shift1(g1.tet), g1.facet, shift2(g2.tet), g2.facet, p);
    }
    if (orientation(out)) return out;
  }
  throw Error(ErrorKind::PreconditionViolated, "no orientable identification of the two boundary spheres");
}

}  // namespace twkit
