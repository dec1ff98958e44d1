#include "twkit/spec_io.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "twkit/error.hpp"

namespace twkit {

void SfsSpec::check() const {
  if (base == BaseSurface::NonOrientable && genus < 1)
    throw Error(ErrorKind::InvalidSpec, "non-orientable base needs genus >= 1");
  if (base == BaseSurface::Sphere && genus != 0) throw Error(ErrorKind::InvalidSpec, "sphere base has genus 0");
  for (const auto& f : fibers) {
    if (f.a < 2) throw Error(ErrorKind::InvalidSpec, "fiber (" + std::to_string(f.a) + "," + std::to_string(f.b) + ") needs a >= 2");
    if (std::gcd(f.a, f.b) != 1)
      throw Error(ErrorKind::InvalidSpec, "fiber (" + std::to_string(f.a) + "," + std::to_string(f.b) + ") is not coprime");
  }
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '"')) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits || pos_ - digits > 12) throw Error(ErrorKind::ParseError, "expected an integer near '" + rest() + "'");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  std::string rest() const { return std::string(s_.substr(pos_, 16)); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

SfsSpec parse_sfs_body(Cursor& c) {
  SfsSpec spec;
  if (c.eat_word("sphere")) {
    spec.base = BaseSurface::Sphere;
  } else if (c.eat_word("nonor:")) {
    spec.base = BaseSurface::NonOrientable;
    const long g = c.integer();
    if (g < 1 || g > 1000) throw Error(ErrorKind::InvalidSpec, "bad genus " + std::to_string(g));
    spec.genus = static_cast<int>(g);
  } else {
    throw Error(ErrorKind::ParseError, "expected 'sphere' or 'nonor:G'");
  }
  while (c.eat('(')) {
    Fiber f;
    f.a = c.integer();
    if (!c.eat(',')) throw Error(ErrorKind::ParseError, "expected ',' in fiber");
    f.b = c.integer();
    if (!c.eat(')')) throw Error(ErrorKind::ParseError, "expected ')' in fiber");
    spec.fibers.push_back(f);
  }
  if (!c.done()) throw Error(ErrorKind::ParseError, "unexpected text '" + c.rest() + "'");
  spec.check();
  return spec;
}

}  // namespace

SfsSpec parse_sfs(std::string_view text) {
  const std::string line = strip_comment(text);
  Cursor c(line);
  if (!c.eat_word("sfs")) throw Error(ErrorKind::ParseError, "expected 'sfs'");
  return parse_sfs_body(c);
}

std::string format_sfs(const SfsSpec& spec) {
  std::ostringstream out;
  out << "sfs ";
  if (spec.base == BaseSurface::Sphere)
    out << "sphere";
  else
    out << "nonor:" << spec.genus;
  for (const auto& f : spec.fibers) out << " (" << f.a << ',' << f.b << ')';
  return out.str();
}

GraphManifoldSpec parse_graph_manifold(std::string_view text) {
  GraphManifoldSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool started = false;
  bool ended = false;
  while (std::getline(in, raw)) {
    const std::string line = strip_comment(raw);
    Cursor c(line);
    if (c.done()) continue;
    if (ended) throw Error(ErrorKind::ParseError, "text after 'end'");
    if (!started) {
      if (!c.eat_word("gm") || !c.done()) throw Error(ErrorKind::ParseError, "expected 'gm'");
      started = true;
    } else if (c.eat_word("node")) {
      if (!c.eat_word("sfs")) throw Error(ErrorKind::ParseError, "node needs an sfs description");
      spec.nodes.push_back(parse_sfs_body(c));
    } else if (c.eat_word("arc")) {
      GraphManifoldArc arc;
      arc.u = static_cast<int>(c.integer());
      arc.v = static_cast<int>(c.integer());
      while (!c.done()) arc.word.push_back(static_cast<int>(c.integer()));
      spec.arcs.push_back(arc);
    } else if (c.eat_word("end")) {
      if (!c.done()) throw Error(ErrorKind::ParseError, "text after 'end'");
      ended = true;
    } else {
      throw Error(ErrorKind::ParseError, "unknown line '" + line + "'");
    }
  }
  if (!ended) throw Error(ErrorKind::ParseError, "missing 'end'");
  const int n = static_cast<int>(spec.nodes.size());
  for (const auto& a : spec.arcs)
    if (a.u < 0 || a.v < 0 || a.u >= n || a.v >= n) throw Error(ErrorKind::InvalidSpec, "arc endpoint out of range");
  return spec;
}

std::string format_graph_manifold(const GraphManifoldSpec& spec) {
  std::ostringstream out;
  out << "gm\n";
  for (const auto& node : spec.nodes) out << "node " << format_sfs(node) << '\n';
  for (const auto& a : spec.arcs) {
    out << "arc " << a.u << ' ' << a.v;
    for (int w : a.word) out << ' ' << w;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

}  // namespace twkit
