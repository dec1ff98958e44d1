#include "twkit/table_io.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "twkit/error.hpp"

namespace twkit {

std::string write_gluing_table(const Triangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.size() << '\n';
  for (int i = 0; i < tri.size(); ++i) {
    out << i << ':';
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.adjacent(i, f);
      out << ' ';
      if (g)
        out << g->tet << '(' << g->perm.str() << ')';
      else
        out << '-';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view s, int line) {
  if (s.empty()) parse_fail(line, "expected an integer");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail(line, "expected an integer");
    v = v * 10 + (c - '0');
    if (v > 10'000'000) parse_fail(line, "integer too large");
  }
  return v;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Triangulation read_gluing_table(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && split_ws(lines[li]).empty()) ++li;
  if (li == lines.size()) parse_fail(1, "empty input");
  auto header = split_ws(lines[li]);
  if (header.size() != 2 || header[0] != "tets") parse_fail(static_cast<int>(li) + 1, "expected 'tets N'");
  const int n = parse_int(header[1], static_cast<int>(li) + 1);
  ++li;

  struct Entry {
    int tet;
    Perm4 perm;
  };
  std::vector<std::array<std::optional<Entry>, 4>> rows(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    auto tok = split_ws(lines[li]);
    if (tok.empty()) continue;
    if (tok.size() != 5 || tok[0].empty() || tok[0].back() != ':') parse_fail(lineno, "expected 'i: e0 e1 e2 e3'");
    const int i = parse_int(tok[0].substr(0, tok[0].size() - 1), lineno);
    if (i >= n || seen[static_cast<std::size_t>(i)]) parse_fail(lineno, "bad or repeated tetrahedron index");
    seen[static_cast<std::size_t>(i)] = true;
    for (int f = 0; f < 4; ++f) {
      auto e = tok[static_cast<std::size_t>(f) + 1];
      if (e == "-") continue;
      auto open = e.find('(');
      if (open == std::string_view::npos || e.size() != open + 6 || e.back() != ')')
        parse_fail(lineno, "expected 'j(wxyz)' or '-'");
      const int j = parse_int(e.substr(0, open), lineno);
      if (j >= n) parse_fail(lineno, "target tetrahedron out of range");
      std::array<int, 4> img{};
      for (int k = 0; k < 4; ++k) img[static_cast<std::size_t>(k)] = e[open + 1 + static_cast<std::size_t>(k)] - '0';
      try {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] = Entry{j, Perm4::from_images(img)};
      } catch (const Error&) {
        parse_fail(lineno, "not a permutation");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[static_cast<std::size_t>(i)]) parse_fail(static_cast<int>(lines.size()), "missing row for tetrahedron " + std::to_string(i));

  Triangulation tri(n);
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& e = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
      if (!e) continue;
      const int g = e->perm[f];
      const auto& back = rows[static_cast<std::size_t>(e->tet)][static_cast<std::size_t>(g)];
      if (!back || back->tet != i || back->perm != e->perm.inverse())
        throw Error(ErrorKind::ParseError, "gluing of facet (" + std::to_string(i) + "," + std::to_string(f) +
                                               ") is not matched by its partner");
      if (std::pair(i, f) < std::pair(e->tet, g)) tri.glue(i, f, e->tet, g, e->perm);
      else if (e->tet == i && f == g)
        throw Error(ErrorKind::ParseError, "facet glued to itself");
    }
  }
  return tri;
}

std::string write_regina_script(const Triangulation& tri) {
  std::ostringstream out;
  out << "t = Triangulation3()\n";
  for (int i = 0; i < tri.size(); ++i) out << "t.newSimplex()\n";
  for (int i = 0; i < tri.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.adjacent(i, f);
      if (!g || std::pair(g->tet, g->facet) < std::pair(i, f)) continue;
      const auto& p = g->perm;
      out << "t.simplex(" << i << ").join(" << f << ", t.simplex(" << g->tet << "), NPerm4(" << p[0] << ','
          << p[1] << ',' << p[2] << ',' << p[3] << "))\n";
    }
  return out.str();
}

Triangulation read_regina_script(std::string_view text) {
  static const std::regex join_re(
      R"(t\.simplex\((\d+)\)\.join\(\s*(\d)\s*,\s*t\.simplex\((\d+)\)\s*,\s*NPerm4\(\s*(?:(\d)\s*,\s*(\d)\s*,\s*(\d)\s*,\s*(\d))?\s*\)\s*\))");
  int n = 0;
  std::vector<std::string> gluings;
  for (auto line : split_lines(text)) {
    std::string s(line);
    if (s.find("newSimplex") != std::string::npos) {
      ++n;
      continue;
    }
    std::smatch m;
    if (!std::regex_search(s, m, join_re)) continue;
    const int i = std::stoi(m[1]);
    const int f = std::stoi(m[2]);
    const int j = std::stoi(m[3]);
    Perm4 p;
    if (m[4].matched) p = Perm4::from_images({std::stoi(m[4]), std::stoi(m[5]), std::stoi(m[6]), std::stoi(m[7])});
    if (f < 0 || f > 3) throw Error(ErrorKind::ParseError, "facet out of range");
    gluings.push_back(format_face_gluing(i, f, j, p));
  }
  std::vector<std::string_view> views(gluings.begin(), gluings.end());
  return from_face_gluings(n, views);
}

std::string write_face_gluings(const Triangulation& tri) {
  std::string out;
  for (int i = 0; i < tri.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.adjacent(i, f);
      if (!g || std::pair(g->tet, g->facet) < std::pair(i, f)) continue;
      out += format_face_gluing(i, f, g->tet, g->perm);
      out += '\n';
    }
  return out;
}

}  // namespace twkit
