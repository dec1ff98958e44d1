#include "twkit/triangulation.hpp"

#include <algorithm>

#include "twkit/error.hpp"

namespace twkit {

int Triangulation::add_tetrahedron() {
  adj_.emplace_back();
  return size() - 1;
}

int Triangulation::insert(const Triangulation& other) {
  const int offset = size();
  for (const auto& row : other.adj_) {
    auto& copy = adj_.emplace_back(row);
    for (auto& g : copy)
      if (g) g->tet += offset;
  }
  return offset;
}

void Triangulation::check_index(int i, int f) const {
  if (i < 0 || i >= size() || f < 0 || f > 3)
    throw Error(ErrorKind::IndexOutOfRange,
                "facet (" + std::to_string(i) + "," + std::to_string(f) + ") does not exist");
}

void Triangulation::glue(int i, int f, int j, int g, Perm4 perm) {
  check_index(i, f);
  check_index(j, g);
  if (i == j && f == g) throw Error(ErrorKind::SelfIdentity, "a facet cannot be glued to itself");
  if (perm[f] != g)
    throw Error(ErrorKind::PermFacetMismatch,
                "permutation " + perm.str() + " sends facet " + std::to_string(f) + " to " +
                    std::to_string(perm[f]) + ", not " + std::to_string(g));
  if (is_glued(i, f) || is_glued(j, g))
    throw Error(ErrorKind::AlreadyGlued, "facet already glued");
  adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] = Gluing{j, g, perm};
  adj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = Gluing{i, f, perm.inverse()};
}

void Triangulation::unglue(int i, int f) {
  check_index(i, f);
  auto& slot = adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
  if (!slot) return;
  adj_[static_cast<std::size_t>(slot->tet)][static_cast<std::size_t>(slot->facet)].reset();
  slot.reset();
}

const std::optional<Gluing>& Triangulation::adjacent(int i, int f) const {
  check_index(i, f);
  return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
}

int Triangulation::glued_pair_count() const {
  int glued = 0;
  for (const auto& row : adj_)
    for (const auto& g : row)
      if (g) ++glued;
  return glued / 2;
}

int Triangulation::boundary_facet_count() const {
  int free = 0;
  for (const auto& row : adj_)
    for (const auto& g : row)
      if (!g) ++free;
  return free;
}

Triangulation Triangulation::without(int i) const {
  check_index(i, 0);
  std::vector<int> old_to_new(adj_.size());
  int next = 0;
  for (int t = 0; t < size(); ++t) old_to_new[static_cast<std::size_t>(t)] = (t == i) ? -1 : next++;
  Triangulation out(size() - 1);
  for (int t = 0; t < size(); ++t) {
    if (t == i) continue;
    for (int f = 0; f < 4; ++f) {
      const auto& g = adj_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (!g || g->tet == i) continue;
      out.adj_[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(t)])]
              [static_cast<std::size_t>(f)] =
          Gluing{old_to_new[static_cast<std::size_t>(g->tet)], g->facet, g->perm};
    }
  }
  return out;
}

Triangulation Triangulation::renumbered(const std::vector<int>& old_to_new) const {
  Triangulation out(size());
  for (int t = 0; t < size(); ++t) {
    const auto nt = static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(t)]);
    for (int f = 0; f < 4; ++f) {
      const auto& g = adj_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (g)
        out.adj_[nt][static_cast<std::size_t>(f)] =
            Gluing{old_to_new[static_cast<std::size_t>(g->tet)], g->facet, g->perm};
    }
  }
  return out;
}

void Triangulation::relabel_tetrahedron(int i, Perm4 sigma) {
  check_index(i, 0);
  const Perm4 inv = sigma.inverse();
  auto old_row = adj_[static_cast<std::size_t>(i)];
  // Incoming gluings from other tetrahedra compose with sigma on the target side.
  for (int t = 0; t < size(); ++t) {
    if (t == i) continue;
    for (auto& g : adj_[static_cast<std::size_t>(t)])
      if (g && g->tet == i) {
        g->facet = sigma[g->facet];
        g->perm = sigma * g->perm;
      }
  }
  std::array<std::optional<Gluing>, 4> row;
  for (int f = 0; f < 4; ++f) {
    auto g = old_row[static_cast<std::size_t>(f)];
    if (!g) continue;
    if (g->tet == i) {
      g->facet = sigma[g->facet];
      g->perm = sigma * g->perm * inv;
    } else {
      g->perm = g->perm * inv;
    }
    row[static_cast<std::size_t>(sigma[f])] = g;
  }
  adj_[static_cast<std::size_t>(i)] = row;
}

Triangulation glue_facets(Triangulation tri, int i, int f, int j, int g, Perm4 perm) {
  tri.glue(i, f, j, g, perm);
  return tri;
}

namespace {

// Decodes one UTF-8 subscript digit (U+2080..U+2089) or ASCII digit at pos.
int take_digit(std::string_view s, std::size_t& pos) {
  if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') return s[pos++] - '0';
  if (pos + 2 < s.size() + 0 && static_cast<unsigned char>(s[pos]) == 0xE2 &&
      static_cast<unsigned char>(s[pos + 1]) == 0x82) {
    const auto c = static_cast<unsigned char>(s[pos + 2]);
    if (c >= 0x80 && c <= 0x89) {
      pos += 3;
      return c - 0x80;
    }
  }
  return -1;
}

struct Face {
  int tet;
  std::array<int, 3> labels;
};

Face parse_face(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  // Skip the tetrahedron symbol: any run of non-digit bytes before the index.
  std::size_t probe = pos;
  while (probe < s.size() && s[probe] != '(') {
    std::size_t p = probe;
    if (take_digit(s, p) >= 0) break;
    ++probe;
  }
  if (probe == pos || probe >= s.size()) throw Error(ErrorKind::MalformedSpec, "missing tetrahedron name");
  pos = probe;
  int tet = -1;
  for (int d = take_digit(s, pos); d >= 0; d = take_digit(s, pos)) tet = (tet < 0 ? 0 : tet * 10) + d;
  if (tet < 0) throw Error(ErrorKind::MalformedSpec, "missing tetrahedron index");
  if (pos >= s.size() || s[pos] != '(') throw Error(ErrorKind::MalformedSpec, "expected '('");
  ++pos;
  Face face{tet, {}};
  for (int k = 0; k < 3; ++k) {
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '3')
      throw Error(ErrorKind::MalformedSpec, "expected three vertex labels in 0..3");
    face.labels[static_cast<std::size_t>(k)] = s[pos++] - '0';
  }
  if (pos >= s.size() || s[pos] != ')') throw Error(ErrorKind::MalformedSpec, "expected ')'");
  ++pos;
  const auto& l = face.labels;
  if (l[0] == l[1] || l[0] == l[2] || l[1] == l[2])
    throw Error(ErrorKind::RepeatedLabel, "face labels must be distinct");
  return face;
}

int missing_label(const std::array<int, 3>& l) { return 6 - l[0] - l[1] - l[2]; }

}  // namespace

FaceGluingSpec parse_face_gluing(std::string_view text) {
  std::size_t pos = 0;
  const Face from = parse_face(text, pos);
  // Arrow: any of "↦", "→", "->", "|->", "=".
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '|' || text[pos] == '-' ||
                               text[pos] == '>' || text[pos] == '=' ||
                               static_cast<unsigned char>(text[pos]) >= 0x80)) {
    // Stop at a non-ASCII byte that begins the target's tetrahedron symbol (e.g. "Δ").
    if (static_cast<unsigned char>(text[pos]) == 0xCE) break;
    ++pos;
  }
  const Face to = parse_face(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\r')) ++pos;
  if (pos != text.size()) throw Error(ErrorKind::MalformedSpec, "trailing characters");

  std::array<int, 4> images{};
  for (int k = 0; k < 3; ++k)
    images[static_cast<std::size_t>(from.labels[static_cast<std::size_t>(k)])] =
        to.labels[static_cast<std::size_t>(k)];
  const int f = missing_label(from.labels);
  const int g = missing_label(to.labels);
  images[static_cast<std::size_t>(f)] = g;
  return FaceGluingSpec{from.tet, f, to.tet, g, Perm4::from_images(images)};
}

std::string format_face_gluing(int tet_from, int facet_from, int tet_to, Perm4 perm) {
  std::string a = "D" + std::to_string(tet_from) + "(";
  std::string b = "D" + std::to_string(tet_to) + "(";
  for (int v = 0; v < 4; ++v) {
    if (v == facet_from) continue;
    a += static_cast<char>('0' + v);
    b += static_cast<char>('0' + perm[v]);
  }
  return a + ") -> " + b + ")";
}

Triangulation from_face_gluings(int tetrahedra, const std::vector<std::string_view>& gluings) {
  Triangulation tri(tetrahedra);
  for (auto text : gluings) {
    const auto g = parse_face_gluing(text);
    tri.glue(g.tet_from, g.facet_from, g.tet_to, g.facet_to, g.perm);
  }
  return tri;
}

}  // namespace twkit
