#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include <omp.h>

#include "twkit/error.hpp"
#include "twkit/width.hpp"

namespace twkit {

namespace {

using Mask = std::uint32_t;

std::vector<std::set<int>> simple_adjacency(const Multigraph& g) {
  std::vector<std::set<int>> adj(static_cast<std::size_t>(g.node_count));
  for (auto [u, v] : g.arcs)
    if (u != v) {
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
  return adj;
}

// Number of vertices outside S + v that v reaches through S.
int q_size(const std::vector<Mask>& adj, Mask s, int v) {
  Mask comp = Mask{1} << v;
  Mask nb = 0;
  for (;;) {
    nb = 0;
    for (Mask c = comp; c; c &= c - 1) nb |= adj[static_cast<std::size_t>(std::countr_zero(c))];
    const Mask add = nb & s & ~comp;
    if (!add) break;
    comp |= add;
  }
  return std::popcount(nb & ~s & ~(Mask{1} << v));
}

// Best value reaching a subset, and the vertex added last (ties: smaller vertex).
struct State {
  std::uint8_t value;
  std::int8_t last;
  bool better_than(const State& o) const { return value != o.value ? value < o.value : last < o.last; }
};

using Layer = std::unordered_map<Mask, State>;

void relax(Layer& layer, Mask key, State st) {
  auto [it, inserted] = layer.try_emplace(key, st);
  if (!inserted && st.better_than(it->second)) it->second = st;
}

// Greedy min-degree elimination on the masked kernel; returns width.
int min_degree_order(std::vector<Mask> adj, std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  Mask alive = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int width = 0;
  order.clear();
  while (alive) {
    int best = -1;
    int best_deg = 1 << 20;
    for (Mask a = alive; a; a &= a - 1) {
      const int v = std::countr_zero(a);
      const int d = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    width = std::max(width, best_deg);
    const Mask nb = adj[static_cast<std::size_t>(best)] & alive;
    for (Mask a = nb; a; a &= a - 1) {
      const int u = std::countr_zero(a);
      adj[static_cast<std::size_t>(u)] |= nb & ~(Mask{1} << u);
    }
    alive &= ~(Mask{1} << best);
    order.push_back(best);
  }
  return width;
}

// Layered TW(S) DP keeping only states below the bound ub.
// Returns the exact width if it is below ub, else ub with order untouched.
int pruned_dp(const std::vector<Mask>& adj, int ub, Execution exec, std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Layer> layers(static_cast<std::size_t>(n) + 1);
  layers[0].emplace(Mask{0}, State{0, -1});
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<Mask, State>> items(layers[static_cast<std::size_t>(k)].begin(),
                                              layers[static_cast<std::size_t>(k)].end());
    if (items.empty()) return ub;
    Layer next;
    if (exec == Execution::Parallel && items.size() > 64) {
      const int threads = omp_get_max_threads();
      std::vector<Layer> local(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(dynamic, 16)
      for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const auto [s, st] = items[idx];
        auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
        for (Mask rest = full & ~s; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int val = std::max<int>(st.value, q_size(adj, s, v));
          if (val < ub) relax(out, s | (Mask{1} << v), State{static_cast<std::uint8_t>(val), static_cast<std::int8_t>(v)});
        }
      }
      // The merge takes minima, so the result does not depend on scheduling.
      for (auto& l : local)
        for (const auto& [key, st] : l) relax(next, key, st);
    } else {
      for (const auto& [s, st] : items)
        for (Mask rest = full & ~s; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int val = std::max<int>(st.value, q_size(adj, s, v));
          if (val < ub) relax(next, s | (Mask{1} << v), State{static_cast<std::uint8_t>(val), static_cast<std::int8_t>(v)});
        }
    }
    layers[static_cast<std::size_t>(k) + 1] = std::move(next);
  }
  const auto it = layers[static_cast<std::size_t>(n)].find(full);
  if (it == layers[static_cast<std::size_t>(n)].end()) return ub;
  order.assign(static_cast<std::size_t>(n), -1);
  Mask s = full;
  for (int k = n; k > 0; --k) {
    const int v = layers[static_cast<std::size_t>(k)].at(s).last;
    order[static_cast<std::size_t>(k) - 1] = v;
    s &= ~(Mask{1} << v);
  }
  return it->second.value;
}

bool is_clique(const std::vector<std::set<int>>& adj, const std::vector<int>& nodes) {
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (!adj[static_cast<std::size_t>(nodes[a])].count(nodes[b])) return false;
  return true;
}

void eliminate(std::vector<std::set<int>>& adj, int v) {
  const std::vector<int> nb(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
  for (int a : nb) {
    adj[static_cast<std::size_t>(a)].erase(v);
    for (int b : nb)
      if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
  }
  adj[static_cast<std::size_t>(v)].clear();
}

// Largest minimum degree over the min-degree peeling sequence.
int degeneracy(std::vector<std::set<int>> adj, const std::vector<bool>& alive_in) {
  auto alive = alive_in;
  int best = 0;
  for (;;) {
    int v = -1;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
      if (alive[static_cast<std::size_t>(u)] &&
          (v < 0 || adj[static_cast<std::size_t>(u)].size() < adj[static_cast<std::size_t>(v)].size()))
        v = u;
    if (v < 0) return best;
    best = std::max(best, static_cast<int>(adj[static_cast<std::size_t>(v)].size()));
    for (int u : adj[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(u)].erase(v);
    adj[static_cast<std::size_t>(v)].clear();
    alive[static_cast<std::size_t>(v)] = false;
  }
}

TreewidthResult finish(const Multigraph& g, int width, std::vector<int> order) {
  TreewidthResult r;
  r.width = width;
  r.decomposition = decomposition_from_elimination(g, order);
  r.elimination_order = std::move(order);
  return r;
}

}  // namespace

TreeDecomposition decomposition_from_elimination(const Multigraph& g, const std::vector<int>& order) {
  auto adj = simple_adjacency(g);
  const int n = g.node_count;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  TreeDecomposition td;
  td.bags.resize(order.size());
  int previous_root = -1;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    auto& bag = td.bags[static_cast<std::size_t>(i)];
    bag.push_back(v);
    int parent = -1;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      bag.push_back(u);
      if (parent < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]) parent = u;
    }
    std::sort(bag.begin(), bag.end());
    if (parent >= 0) {
      td.tree.emplace_back(i, pos[static_cast<std::size_t>(parent)]);
    } else {
      if (previous_root >= 0) td.tree.emplace_back(previous_root, i);
      previous_root = i;
    }
    eliminate(adj, v);
  }
  return td;
}

int elimination_width(const Multigraph& g, const std::vector<int>& order) {
  return decomposition_from_elimination(g, order).width();
}

TreewidthResult treewidth_exact(const Multigraph& g, int cap, Execution exec) {
  const int n = g.node_count;
  if (n == 0) return {};
  auto adj = simple_adjacency(g);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  int low = degeneracy(adj, alive);
  int remaining = n;
  std::vector<int> order;

  auto drop = [&](int v) {
    eliminate(adj, v);
    alive[static_cast<std::size_t>(v)] = false;
    order.push_back(v);
    --remaining;
  };

  for (bool changed = true; changed && remaining > 0;) {
    changed = false;
    if (remaining <= low + 1) {
      for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) drop(v);
      break;
    }
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      const std::vector<int> nb(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
      const int d = static_cast<int>(nb.size());
      bool reducible = false;
      if (is_clique(adj, nb)) {
        low = std::max(low, d);
        reducible = true;
      } else if (d <= low) {
        for (std::size_t skip = 0; skip < nb.size() && !reducible; ++skip) {
          std::vector<int> rest;
          for (std::size_t k = 0; k < nb.size(); ++k)
            if (k != skip) rest.push_back(nb[k]);
          reducible = is_clique(adj, rest);
        }
      }
      if (reducible) {
        drop(v);
        changed = true;
        break;
      }
    }
  }
  if (remaining == 0) return finish(g, low, std::move(order));

  std::vector<int> kernel;
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) kernel.push_back(v);
  const int k = static_cast<int>(kernel.size());
  {
    // A greedy order meeting the lower bound settles it without the DP.
    auto trial_adj = adj;
    std::vector<int> greedy;
    int width = 0;
    std::set<int> left(kernel.begin(), kernel.end());
    while (!left.empty()) {
      int v = *left.begin();
      for (int u : left)
        if (trial_adj[static_cast<std::size_t>(u)].size() < trial_adj[static_cast<std::size_t>(v)].size()) v = u;
      width = std::max(width, static_cast<int>(trial_adj[static_cast<std::size_t>(v)].size()));
      eliminate(trial_adj, v);
      left.erase(v);
      greedy.push_back(v);
    }
    if (width <= low) {
      order.insert(order.end(), greedy.begin(), greedy.end());
      return finish(g, low, std::move(order));
    }
  }
  if (k > std::min(cap, 31))
    throw Error(ErrorKind::TooLarge, "treewidth kernel has " + std::to_string(k) + " nodes, cap " + std::to_string(cap));
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(kernel[static_cast<std::size_t>(i)])] = i;
  std::vector<Mask> kadj(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int u : adj[static_cast<std::size_t>(kernel[static_cast<std::size_t>(i)])])
      kadj[static_cast<std::size_t>(i)] |= Mask{1} << index[static_cast<std::size_t>(u)];

  std::vector<int> korder;
  const int ub = min_degree_order(kadj, korder);
  int kw = ub;
  if (ub > low) kw = pruned_dp(kadj, ub, exec, korder);
  for (int i : korder) order.push_back(kernel[static_cast<std::size_t>(i)]);
  return finish(g, std::max(low, kw), std::move(order));
}

TreewidthResult treewidth_reference(const Multigraph& g, int cap) {
  const int n = g.node_count;
  if (n == 0) return {};
  if (n > std::min(cap, 24)) throw Error(ErrorKind::TooLarge, "reference treewidth cap exceeded");
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.arcs)
    if (u != v) {
      adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> tw(size, 0);
  std::vector<std::int8_t> last(size, -1);
  for (std::size_t s = 1; s < size; ++s) {
    int best = 1 << 20;
    for (Mask rest = static_cast<Mask>(s); rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask before = static_cast<Mask>(s) & ~(Mask{1} << v);
      const int val = std::max<int>(tw[before], q_size(adj, before, v));
      if (val < best) {
        best = val;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = static_cast<std::uint8_t>(best);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  Mask s = static_cast<Mask>(size - 1);
  for (int k = n; k > 0; --k) {
    const int v = last[s];
    order[static_cast<std::size_t>(k) - 1] = v;
    s &= ~(Mask{1} << v);
  }
  return finish(g, tw[size - 1], std::move(order));
}

}  // namespace twkit
