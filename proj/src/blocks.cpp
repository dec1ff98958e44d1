#include "twkit/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "twkit/error.hpp"

namespace twkit {

// ---- docking sites ----------------------------------------------------------

int DockingSite::vertical(const SkeletonSummary& sk, int k) const {
  const auto& t = triangles[static_cast<std::size_t>(k)];
  return sk.edge(t.facet.tet, t.hv, t.vd);
}

int DockingSite::horizontal(const SkeletonSummary& sk) const {
  const auto& t = triangles[0];
  return sk.edge(t.facet.tet, t.hd, t.hv);
}

int DockingSite::diagonal(const SkeletonSummary& sk) const {
  const auto& t = triangles[0];
  return sk.edge(t.facet.tet, t.hd, t.vd);
}

DockingSite DockingSite::shifted(int offset) const {
  DockingSite out = *this;
  for (auto& t : out.triangles) t.facet.tet += offset;
  return out;
}

namespace {

std::array<int, 3> corners_of(int facet) {
  std::array<int, 3> c{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != facet) c[static_cast<std::size_t>(k++)] = v;
  return c;
}

enum Role { Vertical, Horizontal, Diagonal };

// Labels the corners of a boundary triangle from the roles of the edges
// opposite them: vertical edges are loops, horizontal ones lie in `horizontal`.
SiteTriangle label_triangle(const SkeletonSummary& sk, FacetRef facet, const std::set<int>& horizontal) {
  SiteTriangle out;
  out.facet = facet;
  const auto c = corners_of(facet.facet);
  int seen = 0;
  for (int i = 0; i < 3; ++i) {
    const int a = c[static_cast<std::size_t>((i + 1) % 3)];
    const int b = c[static_cast<std::size_t>((i + 2) % 3)];
    const int opposite = c[static_cast<std::size_t>(i)];
    Role role = Diagonal;
    if (sk.vertex(facet.tet, a) == sk.vertex(facet.tet, b))
      role = Vertical;
    else if (horizontal.contains(sk.edge(facet.tet, a, b)))
      role = Horizontal;
    seen |= 1 << role;
    if (role == Vertical) out.hd = opposite;
    if (role == Horizontal) out.vd = opposite;
    if (role == Diagonal) out.hv = opposite;
  }
  if (seen != 7) throw Error(ErrorKind::PreconditionViolated, "boundary triangle without one edge of each role");
  return out;
}

// Pairs the free facets of an assembly of core units into docking sites by
// their shared diagonal. Horizontal triangles are facet 0 of each unit's Δ0.
std::vector<DockingSite> find_sites(const Triangulation& tri, int units) {
  const auto sk = compute_skeleton(tri);
  std::set<int> horizontal;
  for (int u = 0; u < units; ++u)
    for (int a = 1; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) horizontal.insert(sk.edge(3 * u, a, b));
  std::map<int, std::vector<SiteTriangle>> by_diagonal;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (tri.is_glued(t, f)) continue;
      const auto st = label_triangle(sk, {t, f}, horizontal);
      by_diagonal[sk.edge(t, st.hd, st.vd)].push_back(st);
    }
  std::vector<DockingSite> sites;
  for (auto& [d, ts] : by_diagonal) {
    if (ts.size() != 2) throw Error(ErrorKind::PreconditionViolated, "diagonal edge not shared by two boundary triangles");
    sites.push_back({{ts[0], ts[1]}});
  }
  // Sites {Δ0(013), Δ2(012)} of the successive units first, then the rest.
  auto key = [](const DockingSite& s) {
    const auto& f = s.triangles[0].facet;
    const bool a_site = f.tet % 3 == 0 && f.facet == 2;
    return std::pair{a_site ? 0 : 1, f};
  };
  std::sort(sites.begin(), sites.end(), [&](const DockingSite& x, const DockingSite& y) { return key(x) < key(y); });
  return sites;
}

Triangulation core_unit() {
  return from_face_gluings(3, {"D0(012) -> D1(012)", "D1(013) -> D2(013)", "D2(023) -> D0(312)"});
}

int gcd3(long a, long b, long c) { return static_cast<int>(std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c))); }

}  // namespace

// ---- layered solid tori -----------------------------------------------------

namespace {

struct WeightedSlot {
  int tet;
  int a;
  int b;
  long weight;
};

bool valid_triple(long p, long q, long r) {
  std::array<long, 3> m{std::labs(p), std::labs(q), std::labs(r)};
  std::sort(m.begin(), m.end());
  return m[2] == m[0] + m[1] && gcd3(p, q, r) == 1;
}

}  // namespace

LayeredSolidTorus lst(long p, long q, long r) {
  if (!valid_triple(p, q, r))
    throw Error(ErrorKind::InvalidTriple, "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                                              ") needs coprime entries with the largest magnitude the sum of the others");
  std::array<long, 3> m{std::labs(p), std::labs(q), std::labs(r)};
  std::sort(m.begin(), m.end());

  Triangulation tri;
  std::vector<WeightedSlot> slots;
  if (m == std::array<long, 3>{0, 1, 1}) {
    tri = from_face_gluings(3, {"D0(023) -> D1(013)", "D0(123) -> D1(120)", "D1(023) -> D2(201)", "D1(123) -> D2(301)",
                                "D2(023) -> D2(312)"});
    const auto sk = compute_skeleton(tri);
    slots.push_back({0, 0, 1, 0});
    std::set<int> seen{sk.edge(0, 0, 1)};
    for (auto [a, b] : {std::pair{0, 2}, {1, 2}, {0, 3}, {1, 3}})
      if (seen.insert(sk.edge(0, a, b)).second) slots.push_back({0, a, b, 1});
  } else {
    // Reverse Euclid down to (1,2,3) or (1,1,2), then replay the flips.
    std::vector<long> flips;  // weight of the edge flipped at each forward step
    long x = m[0];
    long y = m[1];
    while (!(x == 1 && y == 2) && !(x == 1 && y == 1)) {
      flips.push_back(y - x);
      const long nx = std::min(x, y - x);
      const long ny = std::max(x, y - x);
      x = nx;
      y = ny;
    }
    if (x == 1 && y == 1) flips.push_back(3);
    std::reverse(flips.begin(), flips.end());
    tri = from_face_gluings(1, {"D0(023) -> D0(312)"});
    slots = {{0, 0, 1, 3}, {0, 0, 2, 2}, {0, 0, 3, 1}};
    for (long w : flips) {
      const auto sk = compute_skeleton(tri);
      auto it = std::find_if(slots.begin(), slots.end(), [&](const WeightedSlot& s) { return s.weight == w; });
      long others[2];
      int k = 0;
      long largest = 0;
      for (const auto& s : slots) {
        largest = std::max(largest, s.weight);
        if (&s != &*it) others[k++] = s.weight;
      }
      const long fresh = w == largest ? std::labs(others[0] - others[1]) : others[0] + others[1];
      const int n = layer_on_edge_in_place(tri, sk.edge(it->tet, it->a, it->b));
      *it = {n, 0, 1, fresh};
    }
    // Outermost tetrahedron first.
    const int n = tri.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = n - 1 - i;
    tri = tri.renumbered(order);
    for (auto& s : slots) s.tet = n - 1 - s.tet;
  }

  LayeredSolidTorus out;
  out.tri = std::move(tri);
  out.type = {p, q, r};
  const std::array<long, 3> want{std::labs(p), std::labs(q), std::labs(r)};
  std::vector<bool> used(slots.size(), false);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (used[s] || slots[s].weight != want[k]) continue;
      used[s] = true;
      out.edges[k] = {slots[s].tet, slots[s].a, slots[s].b};
      out.weights[k] = want[k];
      break;
    }
  }
  return out;
}

Triangulation snapped_ball() { return from_face_gluings(1, {"D0(013) -> D0(023)"}); }

// ---- core assemblies and modules --------------------------------------------

CoreAssembly core_assembly(int r) {
  if (r < 1) throw Error(ErrorKind::BadR, "core assembly needs r >= 1, got " + std::to_string(r));
  CoreAssembly out;
  if (r <= 2) {
    out.tri = core_unit();
    auto sites = find_sites(out.tri, 1);
    const int fills = 3 - r;
    for (int i = 0; i < fills; ++i) attach_fiber(out.tri, sites[static_cast<std::size_t>(i)], {1, 0});
    out.sites.assign(sites.begin() + fills, sites.end());
    return out;
  }
  const int units = r - 2;
  const Triangulation unit = core_unit();
  for (int i = 0; i < units; ++i) out.tri.insert(unit);
  for (int i = 1; i < units; ++i) {
    const int base = 3 * (i - 1);
    const int next = 3 * i;
    if (i % 2 == 1) {
      out.tri.glue(base + 1, 0, next + 1, 0, Perm4());
      out.tri.glue(base + 2, 0, next + 2, 0, Perm4());
    } else {
      out.tri.glue(base + 0, 1, next + 0, 1, Perm4());
      out.tri.glue(base + 1, 1, next + 1, 1, Perm4());
    }
  }
  out.sites = find_sites(out.tri, units);
  return out;
}

MoebiusModule moebius_module() {
  MoebiusModule out;
  out.tri = from_face_gluings(3, {"T0(123) -> T1(123)", "T0(023) -> T1(031)", "T1(012) -> T2(201)", "T1(023) -> T2(023)",
                                  "T0(013) -> T2(132)"});
  // Roles are those of the core site the module is attached to:
  // T0(012) -> Δ2(201) and T2(013) -> Δ0(013).
  const auto a3 = core_assembly(3);
  const DockingSite& core = a3.sites[0];
  const Perm4 to_d2(2, 0, 1, 3);
  const Perm4 back = to_d2.inverse();
  for (const auto& t : core.triangles) {
    SiteTriangle m;
    if (t.facet == FacetRef{2, 3}) {
      m.facet = {0, 3};
      m.hd = back[t.hd];
      m.hv = back[t.hv];
      m.vd = back[t.vd];
      out.site.triangles[0] = m;
    } else {
      m = t;
      m.facet = {2, 2};
      out.site.triangles[1] = m;
    }
  }
  return out;
}

Triangulation from_simplices(const std::vector<std::array<int, 4>>& simplices) {
  Triangulation tri(static_cast<int>(simplices.size()));
  std::map<std::array<int, 3>, FacetRef> open;
  for (int t = 0; t < tri.size(); ++t) {
    const auto& s = simplices[static_cast<std::size_t>(t)];
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> key{};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) key[static_cast<std::size_t>(k++)] = s[static_cast<std::size_t>(v)];
      std::sort(key.begin(), key.end());
      auto it = open.find(key);
      if (it == open.end()) {
        open.emplace(key, FacetRef{t, f});
        continue;
      }
      const auto [u, g] = it->second;
      const auto& other = simplices[static_cast<std::size_t>(u)];
      std::array<int, 4> images{};
      for (int v = 0; v < 4; ++v) {
        if (v == f) {
          images[static_cast<std::size_t>(v)] = g;
          continue;
        }
        const auto pos = std::find(other.begin(), other.end(), s[static_cast<std::size_t>(v)]);
        images[static_cast<std::size_t>(v)] = static_cast<int>(pos - other.begin());
      }
      tri.glue(t, f, u, g, Perm4::from_images(images));
      open.erase(it);
    }
  }
  return tri;
}

Triangulation pentachoron_boundary() {
  std::vector<std::array<int, 4>> simplices;
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 4> s{};
    int k = 0;
    for (int v = 0; v < 5; ++v)
      if (v != skip) s[static_cast<std::size_t>(k++)] = v;
    simplices.push_back(s);
  }
  return from_simplices(simplices);
}

// ---- fibers -----------------------------------------------------------------

namespace {

int corner_parity(int facet, int x, int y, int z) {
  const auto c = corners_of(facet);
  const std::array<int, 3> got{x, y, z};
  for (int shift = 0; shift < 3; ++shift)
    if (got[0] == c[static_cast<std::size_t>(shift)] && got[1] == c[static_cast<std::size_t>((shift + 1) % 3)] &&
        got[2] == c[static_cast<std::size_t>((shift + 2) % 3)])
      return 1;
  return -1;
}

bool acceptable(const Triangulation& tri) {
  const auto report = validate(tri);
  return report.valid() && orientation(tri).has_value();
}

// Perm sending the corners of facet `from` (named by roles) onto `to`.
Perm4 role_map(const SiteTriangle& from, const SiteTriangle& to) {
  std::array<int, 4> images{};
  images[static_cast<std::size_t>(from.facet.facet)] = to.facet.facet;
  images[static_cast<std::size_t>(from.hd)] = to.hd;
  images[static_cast<std::size_t>(from.hv)] = to.hv;
  images[static_cast<std::size_t>(from.vd)] = to.vd;
  return Perm4::from_images(images);
}

}  // namespace

int site_sign(const Triangulation& tri, const DockingSite& site) {
  const auto o = orientation(tri);
  if (!o) throw Error(ErrorKind::PreconditionViolated, "docking site on a non-orientable complex");
  const auto& t = site.triangles[0];
  const int induced = (*o)[static_cast<std::size_t>(t.facet.tet)] * (t.facet.facet % 2 == 0 ? 1 : -1);
  return induced * corner_parity(t.facet.facet, t.hd, t.hv, t.vd);
}

void attach_fiber(Triangulation& tri, const DockingSite& site, Fiber fiber) {
  const long a = fiber.a;
  const long b = std::labs(fiber.b);
  const long signed_b = fiber.b == 0 ? 0 : kFiberSign * site_sign(tri, site) * (fiber.b > 0 ? 1 : -1);
  // Meridian weights on the vertical, horizontal and diagonal edges.
  const long d = std::labs(a - signed_b * b);
  const LayeredSolidTorus arm = d == a + b ? lst(a, b, -(a + b)) : lst(a, -b, a >= b ? -d : d);
  for (int mirror = 0; mirror < 2; ++mirror) {
    Triangulation piece = arm.tri;
    std::array<EdgeRef, 3> edges = arm.edges;
    if (mirror) {
      const Perm4 swap = transposition(0, 1);
      for (int i = 0; i < piece.size(); ++i) piece.relabel_tetrahedron(i, swap);
      for (auto& e : edges) {
        e.a = swap[e.a];
        e.b = swap[e.b];
      }
    }
    const auto sk = compute_skeleton(piece);
    std::array<int, 3> role_class{};
    for (std::size_t k = 0; k < 3; ++k) role_class[k] = edges[k].class_in(sk);
    // Arm boundary triangles labelled by the roles of the site edges they meet.
    std::array<SiteTriangle, 2> arm_triangles;
    for (int i = 0; i < 2; ++i) {
      const int f = 3 - i;
      SiteTriangle& t = arm_triangles[static_cast<std::size_t>(i)];
      t.facet = {LayeredSolidTorus::outer, f};
      const auto c = corners_of(f);
      for (int j = 0; j < 3; ++j) {
        const int cls = sk.edge(0, c[static_cast<std::size_t>((j + 1) % 3)], c[static_cast<std::size_t>((j + 2) % 3)]);
        const int opposite = c[static_cast<std::size_t>(j)];
        if (cls == role_class[0]) t.hd = opposite;
        if (cls == role_class[1]) t.vd = opposite;
        if (cls == role_class[2]) t.hv = opposite;
      }
    }
    for (int pairing = 0; pairing < 2; ++pairing) {
      Triangulation trial = tri;
      const int offset = trial.insert(piece);
      for (int i = 0; i < 2; ++i) {
        SiteTriangle from = arm_triangles[static_cast<std::size_t>(i)];
        from.facet.tet += offset;
        const SiteTriangle& to = site.triangles[static_cast<std::size_t>(i ^ pairing)];
        trial.glue(from.facet.tet, from.facet.facet, to.facet.tet, to.facet.facet, role_map(from, to));
      }
      if (acceptable(trial)) {
        tri = std::move(trial);
        return;
      }
    }
  }
  throw Error(ErrorKind::PreconditionViolated,
              "no orientable attachment of fiber (" + std::to_string(fiber.a) + "," + std::to_string(fiber.b) + ")");
}

void fold_site(Triangulation& tri, const DockingSite& site) {
  const SiteTriangle& x = site.triangles[0];
  const SiteTriangle& y = site.triangles[1];
  // Corner hd stays put, hv and vd trade places: this twist realizes (2,1).
  Triangulation trial = tri;
  trial.glue(x.facet.tet, x.facet.facet, y.facet.tet, y.facet.facet, role_map(x, SiteTriangle{y.facet, y.hd, y.vd, y.hv}));
  if (!acceptable(trial)) throw Error(ErrorKind::PreconditionViolated, "twisted identification of this docking site is not a valid orientable complex");
  tri = std::move(trial);
}

}  // namespace twkit
