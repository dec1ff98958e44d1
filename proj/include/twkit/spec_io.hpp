#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace twkit {

/// Exceptional fiber of type (a, b), a >= 2, gcd(a, b) = 1.
struct Fiber {
  long a = 0;
  long b = 0;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

enum class BaseSurface { Sphere, NonOrientable };

struct SfsSpec {
  BaseSurface base = BaseSurface::Sphere;
  int genus = 0;  ///< number of crosscaps for a non-orientable base
  std::vector<Fiber> fibers;

  /// Throws InvalidSpec on a_i < 2, gcd(a_i, b_i) != 1 or a bad genus.
  void check() const;
  friend bool operator==(const SfsSpec&, const SfsSpec&) = default;
};

struct GraphManifoldArc {
  int u = 0;
  int v = 0;
  std::vector<int> word;  ///< boundary edge indices layered onto u's site
  friend bool operator==(const GraphManifoldArc&, const GraphManifoldArc&) = default;
};

struct GraphManifoldSpec {
  std::vector<SfsSpec> nodes;
  std::vector<GraphManifoldArc> arcs;
  friend bool operator==(const GraphManifoldSpec&, const GraphManifoldSpec&) = default;
};

// Text grammar (whitespace-separated tokens, '#' starts a comment):
//
//   sfs-line := "sfs" base fiber*
//   base     := "sphere" | "nonor:" G
//   fiber    := "(" A "," B ")"          e.g. (2,1) (5,-4); "(2,1)(3,1)" also accepted
//
//   gm-block := "gm" NEWLINE { "node" sfs-line NEWLINE | "arc" U V index* NEWLINE } "end"
//
// Node indices count node lines from 0. format_* emits the canonical form,
// which parses back to an equal value.

SfsSpec parse_sfs(std::string_view text);
std::string format_sfs(const SfsSpec& spec);

GraphManifoldSpec parse_graph_manifold(std::string_view text);
std::string format_graph_manifold(const GraphManifoldSpec& spec);

}  // namespace twkit
