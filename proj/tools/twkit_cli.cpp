// twkit: build, check, measure and export triangulations.
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "twkit/algebra.hpp"
#include "twkit/assemble.hpp"
#include "twkit/error.hpp"
#include "twkit/table_io.hpp"
#include "twkit/width.hpp"

using namespace twkit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

void need(const std::vector<std::string>& p, std::size_t n, const char* usage) {
  if (p.size() != n) throw UsageError(std::string("usage: build ") + usage);
}

FlipWord random_flip_word(int genus, int length, unsigned seed) {
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    FlipWord w;
    w.genus = genus;
    for (int i = 0; i < length; ++i) w.flips.push_back(static_cast<int>(rng() % static_cast<unsigned>(6 * genus - 3)));
    try {
      if (closure_count(w) > 0) return w;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::NonSimplicialClosure, "no closable random word found");
}

Triangulation build(const std::string& name, const std::vector<std::string>& p, int closure, int random_length, unsigned seed) {
  if (name == "lst") {
    need(p, 3, "lst P Q R");
    return lst(to_long(p[0]), to_long(p[1]), to_long(p[2])).tri;
  }
  if (name == "snapped") {
    need(p, 0, "snapped");
    return snapped_ball();
  }
  if (name == "core") {
    need(p, 1, "core R");
    return core_assembly(static_cast<int>(to_long(p[0]))).tri;
  }
  if (name == "moebius") {
    need(p, 0, "moebius");
    return moebius_module().tri;
  }
  if (name == "handlebody") {
    need(p, 1, "handlebody G");
    return layered_handlebody(static_cast<int>(to_long(p[0]))).tri;
  }
  if (name == "sfs") {
    if (p.empty()) throw UsageError("usage: build sfs sphere|nonor:G \"(a,b)...\"");
    std::string text = "sfs";
    for (const auto& s : p) text += " " + s;
    return sfs(parse_sfs(text));
  }
  if (name == "lens") {
    need(p, 2, "lens P Q");
    return lens_space(to_long(p[0]), to_long(p[1]));
  }
  if (name == "gm") {
    need(p, 1, "gm SPEC_FILE");
    return graph_manifold(parse_graph_manifold(slurp(p[0])));
  }
  if (name == "flipword") {
    if (p.empty()) throw UsageError("usage: build flipword G [INDEX...] [--closure N | --random LEN]");
    const int g = static_cast<int>(to_long(p[0]));
    FlipWord w;
    if (random_length >= 0) {
      if (p.size() != 1) throw UsageError("--random takes no explicit indices");
      w = random_flip_word(g, random_length, seed);
    } else {
      w.genus = g;
      for (std::size_t i = 1; i < p.size(); ++i) w.flips.push_back(static_cast<int>(to_long(p[i])));
    }
    w.closure = closure;
    return layered_from_flip_word(w).tri;
  }
  if (name == "grid") {
    need(p, 1, "grid K");
    return grid_ball(static_cast<int>(to_long(p[0])));
  }
  throw UsageError("unknown construction '" + name + "'");
}

Triangulation load(const std::string& path) {
  const std::string text = slurp(path);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError(path + " is empty");
  return read_gluing_table(text);
}

std::string invariants(const Triangulation& tri, int tw_cap, int cw_cap) {
  std::ostringstream out;
  const auto report = validate(tri);
  const Multigraph g = dual_graph(tri);
  out << "tetrahedra: " << tri.size() << "\n";
  out << "validity: " << report.summary() << "\n";
  if (!report.valid()) return out.str();
  out << "orientable: " << (orientation(tri) ? "yes" : "no") << "\n";
  out << "dual: " << g.node_count << " nodes " << g.arcs.size() << " arcs\n";
  std::map<int, int> degree_counts;
  for (int d : g.degrees()) ++degree_counts[d];
  out << "degrees:";
  for (auto [d, c] : degree_counts) out << " " << d << "x" << c;
  out << "\n";

  bool path_like = false;
  if (report.status == Validity::ClosedManifold && g.node_count > 0) {
    const auto tp = classify_thick_path(g);
    if (tp.kind == ThickPathKind::ThickPath) out << "tw: ≤1 (thick path)\n";
    if (tp.kind == ThickPathKind::SingleNode) out << "tw: ≤1 (single node)\n";
    path_like = tp.kind != ThickPathKind::NotTw1;
  }
  try {
    const auto tw = treewidth_exact(g, tw_cap);
    if (!path_like) out << "tw: " << tw.width << "\n";
    out << "tw-decomposition: width " << tw.decomposition.width() << (validate_decomposition(g, tw.decomposition) ? " valid" : " INVALID") << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    if (!path_like) out << "tw: skipped(cap)\n";
  }
  try {
    const auto cw = cutwidth_exact(g, cw_cap);
    out << "cw: " << cw.width << "\n";
    out << "cw-ordering: width " << cw.ordering.width << (validate_ordering(g, cw.ordering) ? " valid" : " INVALID") << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    out << "cw: skipped(cap)\n";
  }
  out << "H1: " << first_homology(tri).str() << "\n";
  std::map<std::string, int> links;
  for (const auto& s : vertex_link_classes(tri)) ++links[s.describe()];
  out << "links:";
  bool first = true;
  for (const auto& [name, count] : links) {
    out << (first ? " " : ", ") << count << " x " << name;
    first = false;
  }
  out << "\n";
  return out.str();
}

// Exit 1 on any violated property of the stored complex.
int check(const Triangulation& tri) {
  const auto report = validate(tri);
  std::cout << "validity: " << report.summary() << "\n";
  if (!report.valid()) return 1;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (!tri.is_glued(t, f)) continue;
      const Gluing& there = *tri.adjacent(t, f);
      const auto& back = tri.adjacent(there.tet, there.facet);
      if (!back || back->tet != t || back->facet != f || !(back->perm * there.perm == Perm4())) {
        std::cout << "involution: broken at " << t << ":" << f << "\n";
        return 1;
      }
    }
  std::cout << "involution: ok\n";
  std::cout << "orientable: " << (orientation(tri) ? "yes" : "no") << "\n";
  if (report.status == Validity::ClosedManifold) {
    const long chi = compute_skeleton(tri).euler_characteristic();
    std::cout << "euler: " << chi << "\n";
    if (chi != 0) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and measure low-treewidth triangulations of 3-manifolds"};
  app.require_subcommand(1);
  std::string out;
  int tw_cap = kDefaultTreewidthCap;
  int cw_cap = kDefaultCutwidthCap;
  unsigned seed = 1;

  auto* b = app.add_subcommand("build", "Write the gluing table of a named construction");
  std::string name;
  std::vector<std::string> params;
  int closure = 0;
  int random_length = -1;
  b->add_option("name", name, "lst snapped core moebius handlebody sfs lens gm flipword grid")->required();
  b->add_option("params", params, "construction parameters");
  b->add_option("-o", out, "output path (default stdout)");
  b->add_option("--closure", closure, "flipword: which simplicial closure to use");
  b->add_option("--random", random_length, "flipword: random closable word of this length");
  b->add_option("--seed", seed, "seed for --random");
  b->allow_extras(false);
  b->prefix_command(false);

  auto* c = app.add_subcommand("check", "Validate a gluing table");
  std::string in;
  c->add_option("input", in)->required();

  auto* iv = app.add_subcommand("invariants", "Report widths, homology and links");
  iv->add_option("input", in)->required();
  iv->add_option("--tw-cap", tw_cap)->check(CLI::PositiveNumber);
  iv->add_option("--cw-cap", cw_cap)->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("export", "Convert a gluing table");
  std::string format = "table";
  ex->add_option("input", in)->required();
  ex->add_option("--format", format)->check(CLI::IsMember({"table", "dot", "regina"}));
  ex->add_option("-o", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*b) {
      emit(write_gluing_table(build(name, params, closure, random_length, seed)), out);
      return 0;
    }
    if (*c) return check(load(in));
    if (*iv) {
      std::cout << invariants(load(in), tw_cap, cw_cap);
      return 0;
    }
    if (*ex) {
      const Triangulation tri = load(in);
      if (format == "table") emit(write_gluing_table(tri), out);
      if (format == "dot") emit(export_dot(dual_graph(tri)), out);
      if (format == "regina") emit(write_regina_script(tri), out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
