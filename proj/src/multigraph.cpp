#include "twkit/multigraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "twkit/error.hpp"

namespace twkit {

void Multigraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= node_count || v >= node_count)
    throw Error(ErrorKind::IndexOutOfRange, "arc endpoint out of range");
  arcs.emplace_back(u, v);
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(node_count), 0);
  for (auto [u, v] : arcs) {
    ++d[static_cast<std::size_t>(u)];
    ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

int Multigraph::loop_count() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](auto a) { return a.first == a.second; }));
}

std::vector<std::pair<int, int>> Multigraph::canonical_arcs() const {
  auto out = arcs;
  for (auto& [u, v] : out)
    if (u > v) std::swap(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Multigraph::neighbours() const {
  std::vector<std::set<int>> s(static_cast<std::size_t>(node_count));
  for (auto [u, v] : arcs)
    if (u != v) {
      s[static_cast<std::size_t>(u)].insert(v);
      s[static_cast<std::size_t>(v)].insert(u);
    }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i)
    out[static_cast<std::size_t>(i)].assign(s[static_cast<std::size_t>(i)].begin(), s[static_cast<std::size_t>(i)].end());
  return out;
}

Multigraph dual_graph(const Triangulation& tri) {
  Multigraph g(tri.size());
  for (int i = 0; i < tri.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& a = tri.adjacent(i, f);
      if (a && std::pair(i, f) < std::pair(a->tet, a->facet)) g.add_arc(i, a->tet);
    }
  return g;
}

Multigraph simplify(const Multigraph& g) {
  Multigraph s(g.node_count);
  auto arcs = g.canonical_arcs();
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [u, v] : arcs)
    if (u != v) s.arcs.emplace_back(u, v);
  return s;
}

bool is_connected(const Multigraph& g) {
  if (g.node_count == 0) return true;
  const auto nb = g.neighbours();
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : nb[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.node_count;
}

std::string write_multigraph(const Multigraph& g) {
  std::ostringstream out;
  out << "nodes " << g.node_count << '\n';
  for (auto [u, v] : g.canonical_arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

Multigraph read_multigraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  int n = -1;
  if (!(in >> word >> n) || word != "nodes" || n < 0) throw Error(ErrorKind::ParseError, "expected 'nodes N'");
  Multigraph g(n);
  long u = 0;
  long v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error(ErrorKind::ParseError, "arc line needs two endpoints");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::ParseError, "arc endpoint out of range");
    g.arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw Error(ErrorKind::ParseError, "unexpected token");
  return g;
}

std::string export_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (int i = 0; i < g.node_count; ++i) out << "  t" << i << ";\n";
  for (auto [u, v] : g.canonical_arcs()) out << "  t" << u << " -- t" << v << ";\n";
  out << "}\n";
  return out.str();
}

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

bool validate_decomposition(const Multigraph& g, const TreeDecomposition& td) {
  const int m = static_cast<int>(td.bags.size());
  if (m == 0) return g.node_count == 0;
  // The bag tree must be a tree on m vertices.
  if (static_cast<int>(td.tree.size()) != m - 1) return false;
  Multigraph t(m);
  for (auto [a, b] : td.tree) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) return false;
    t.arcs.emplace_back(a, b);
  }
  if (!is_connected(t)) return false;

  std::vector<std::vector<int>> holding(static_cast<std::size_t>(g.node_count));
  for (int b = 0; b < m; ++b)
    for (int v : td.bags[static_cast<std::size_t>(b)]) {
      if (v < 0 || v >= g.node_count) return false;
      holding[static_cast<std::size_t>(v)].push_back(b);
    }
  for (auto& h : holding) {
    if (h.empty()) return false;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
  }
  for (auto [u, v] : g.arcs) {
    const auto& hu = holding[static_cast<std::size_t>(u)];
    const auto& hv = holding[static_cast<std::size_t>(v)];
    std::vector<int> both;
    std::set_intersection(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(both));
    if (both.empty()) return false;
  }
  // Bags holding v induce a connected subtree: |bags| - |tree arcs inside| == 1.
  for (const auto& h : holding) {
    int inside = 0;
    for (auto [a, b] : td.tree)
      if (std::binary_search(h.begin(), h.end(), a) && std::binary_search(h.begin(), h.end(), b)) ++inside;
    if (static_cast<int>(h.size()) - inside != 1) return false;
  }
  return true;
}

std::vector<int> cut_profile(const Multigraph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.node_count), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<int> cut(order.empty() ? 0 : order.size() - 1, 0);
  for (auto [u, v] : g.arcs) {
    int a = pos[static_cast<std::size_t>(u)];
    int b = pos[static_cast<std::size_t>(v)];
    if (a > b) std::swap(a, b);
    for (int l = a; l < b; ++l) ++cut[static_cast<std::size_t>(l)];
  }
  return cut;
}

int ordering_width(const Multigraph& g, const std::vector<int>& order) {
  const auto c = cut_profile(g, order);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

bool validate_ordering(const Multigraph& g, const LinearOrdering& lo) {
  if (static_cast<int>(lo.order.size()) != g.node_count) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count), false);
  for (int v : lo.order) {
    if (v < 0 || v >= g.node_count || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return ordering_width(g, lo.order) == lo.width;
}

std::string ThickPathReport::name() const {
  switch (kind) {
    case ThickPathKind::SingleNode: return "single_node";
    case ThickPathKind::ThickPath: return "thick_path";
    case ThickPathKind::NotTw1: return "not_tw1";
  }
  return "not_tw1";
}

ThickPathReport classify_thick_path(const Multigraph& g) {
  const auto deg = g.degrees();
  for (int v = 0; v < g.node_count; ++v)
    if (deg[static_cast<std::size_t>(v)] != 4)
      throw Error(ErrorKind::NotFourRegular, "node " + std::to_string(v) + " has degree " +
                                                 std::to_string(deg[static_cast<std::size_t>(v)]));
  ThickPathReport r;
  std::map<std::pair<int, int>, int> bundle;
  for (auto [u, v] : g.canonical_arcs())
    if (u != v) ++bundle[{u, v}];
  r.all_bundles_even = std::all_of(bundle.begin(), bundle.end(), [](const auto& kv) { return kv.second % 2 == 0; });
  if (g.node_count == 1) {
    r.kind = ThickPathKind::SingleNode;
    return r;
  }
  const auto s = simplify(g);
  const auto nb = s.neighbours();
  const bool max_two = std::all_of(nb.begin(), nb.end(), [](const auto& l) { return l.size() <= 2; });
  const bool path = g.node_count >= 2 && is_connected(s) &&
                    static_cast<int>(s.arcs.size()) == g.node_count - 1 && max_two;
  r.kind = path ? ThickPathKind::ThickPath : ThickPathKind::NotTw1;
  return r;
}

}  // namespace twkit
