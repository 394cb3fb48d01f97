#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomc/mapper.hpp"
#include "atomc/rng.hpp"

namespace atomc {

void Layout::swap_traps(int t1, int t2) {
  int q1 = trap_to_qubit[t1];
  int q2 = trap_to_qubit[t2];
  trap_to_qubit[t1] = q2;
  trap_to_qubit[t2] = q1;
  if (q1 >= 0) qubit_to_trap[q1] = t2;
  if (q2 >= 0) qubit_to_trap[q2] = t1;
}

void Layout::move_qubit(int q, int t) {
  if (trap_to_qubit[t] >= 0) throw std::invalid_argument("target trap is occupied");
  trap_to_qubit[qubit_to_trap[q]] = -1;
  qubit_to_trap[q] = t;
  trap_to_qubit[t] = q;
}

void Layout::check(int traps) const {
  if (static_cast<int>(trap_to_qubit.size()) != traps)
    throw std::invalid_argument("layout trap count mismatch");
  std::vector<bool> seen(traps, false);
  for (int q = 0; q < n(); ++q) {
    int t = qubit_to_trap[q];
    if (t < 0 || t >= traps) throw std::invalid_argument("trap index out of range");
    if (seen[t]) throw std::invalid_argument("two qubits share a trap");
    seen[t] = true;
    if (trap_to_qubit[t] != q) throw std::invalid_argument("layout inverse is inconsistent");
  }
  for (int t = 0; t < traps; ++t)
    if (trap_to_qubit[t] >= 0 && !seen[t])
      throw std::invalid_argument("trap holds a qubit the forward map does not know");
}

Layout Layout::from_qubit_to_trap(std::vector<int> q2t, int traps) {
  Layout l;
  l.qubit_to_trap = std::move(q2t);
  l.trap_to_qubit.assign(traps, -1);
  for (int q = 0; q < l.n(); ++q) {
    int t = l.qubit_to_trap[q];
    if (t < 0 || t >= traps) throw std::invalid_argument("trap index out of range");
    if (l.trap_to_qubit[t] >= 0) throw std::invalid_argument("two qubits share a trap");
    l.trap_to_qubit[t] = q;
  }
  return l;
}

LayoutStrategy layout_strategy_from_name(const std::string& name) {
  if (name == "identity") return LayoutStrategy::Identity;
  if (name == "random") return LayoutStrategy::Random;
  if (name == "affinity") return LayoutStrategy::Affinity;
  throw std::invalid_argument("unknown layout strategy '" + name + "'");
}

const char* layout_strategy_name(LayoutStrategy s) {
  switch (s) {
    case LayoutStrategy::Identity:
      return "identity";
    case LayoutStrategy::Random:
      return "random";
    case LayoutStrategy::Affinity:
      return "affinity";
  }
  throw std::invalid_argument("unknown layout strategy");
}

namespace {

std::vector<std::vector<double>> interaction_weights(const Circuit& c) {
  std::vector<std::vector<double>> w(c.n, std::vector<double>(c.n, 0.0));
  for (const Gate& g : c.gates)
    for (std::size_t i = 0; i < g.operands.size(); ++i)
      for (std::size_t j = i + 1; j < g.operands.size(); ++j) {
        w[g.operands[i]][g.operands[j]] += 1.0;
        w[g.operands[j]][g.operands[i]] += 1.0;
      }
  return w;
}

// Greedy placement: seed the heaviest-interacting qubit at the grid center,
// then place each remaining qubit (heaviest link to the placed set first) at
// the free trap minimizing its weighted distance to placed partners. Ties fall
// back to distance from the placed centroid so the cluster stays compact and
// the occupied coupling subgraph stays connected.
Layout affinity_layout(const Circuit& c, const HardwareSpec& spec) {
  int traps = spec.traps();
  std::vector<std::vector<double>> w = interaction_weights(c);
  std::vector<double> total(c.n, 0.0);
  for (int q = 0; q < c.n; ++q)
    for (int p = 0; p < c.n; ++p) total[q] += w[q][p];

  std::vector<int> q2t(c.n, -1);
  std::vector<bool> trap_used(traps, false);
  std::vector<bool> placed(c.n, false);

  int first = 0;
  for (int q = 1; q < c.n; ++q)
    if (total[q] > total[first]) first = q;
  int center = (spec.rows / 2) * spec.cols + spec.cols / 2;
  q2t[first] = center;
  trap_used[center] = true;
  placed[first] = true;
  double cx = spec.trap_position(center).x, cy = spec.trap_position(center).y;
  int placed_count = 1;

  while (placed_count < c.n) {
    int best_q = -1;
    double best_link = -1.0, best_total = -1.0;
    for (int q = 0; q < c.n; ++q) {
      if (placed[q]) continue;
      double link = 0.0;
      for (int p = 0; p < c.n; ++p)
        if (placed[p]) link += w[q][p];
      if (best_q < 0 || link > best_link || (link == best_link && total[q] > best_total)) {
        best_q = q;
        best_link = link;
        best_total = total[q];
      }
    }
    Position centroid{cx / placed_count, cy / placed_count};
    int best_t = -1;
    double best_cost = 0.0, best_spread = 0.0;
    for (int t = 0; t < traps; ++t) {
      if (trap_used[t]) continue;
      Position pos = spec.trap_position(t);
      double cost = 0.0;
      for (int p = 0; p < c.n; ++p)
        if (placed[p] && w[best_q][p] > 0.0)
          cost += w[best_q][p] * distance_um(pos, spec.trap_position(q2t[p]));
      double spread = distance_um(pos, centroid);
      if (best_t < 0 || cost < best_cost || (cost == best_cost && spread < best_spread)) {
        best_t = t;
        best_cost = cost;
        best_spread = spread;
      }
    }
    q2t[best_q] = best_t;
    trap_used[best_t] = true;
    placed[best_q] = true;
    cx += spec.trap_position(best_t).x;
    cy += spec.trap_position(best_t).y;
    ++placed_count;
  }
  return Layout::from_qubit_to_trap(std::move(q2t), traps);
}

}  // namespace

Layout initial_layout(const Circuit& c, const HardwareSpec& spec, LayoutStrategy strategy,
                      std::uint64_t seed) {
  if (c.n > spec.traps()) throw std::invalid_argument("more qubits than traps");
  switch (strategy) {
    case LayoutStrategy::Identity: {
      std::vector<int> q2t(c.n);
      for (int q = 0; q < c.n; ++q) q2t[q] = q;
      return Layout::from_qubit_to_trap(std::move(q2t), spec.traps());
    }
    case LayoutStrategy::Random: {
      // Permute within the compact identity footprint; a scatter across the
      // whole grid would disconnect the occupied coupling subgraph.
      std::vector<int> q2t(c.n);
      for (int q = 0; q < c.n; ++q) q2t[q] = q;
      Rng rng(seed);
      rng.shuffle(q2t);
      return Layout::from_qubit_to_trap(std::move(q2t), spec.traps());
    }
    case LayoutStrategy::Affinity:
      return affinity_layout(c, spec);
  }
  throw std::invalid_argument("unknown layout strategy");
}

namespace {

constexpr int kInfHops = 1 << 20;

// Routing workspace over the occupied trap set. Swaps exchange occupants, so
// the occupied set and its induced coupling subgraph never change mid-route.
struct Router {
  const Circuit& c;
  const HardwareSpec& spec;
  const RouteParams& params;
  Layout layout;
  MappedCircuit out;

  std::vector<int> occ;                    // occupied traps, ascending
  std::vector<int> occ_index;              // trap -> index in occ, -1 elsewhere
  std::vector<std::vector<int>> adj;       // occ-index adjacency (r_int rule)
  std::vector<std::vector<int>> hops;      // occ-index all-pairs hop counts
  std::vector<std::pair<int, int>> edges;  // occ-index pairs, lexicographic

  DepGraph dag;
  std::vector<int> indeg;
  std::vector<int> front;  // ready, unexecuted gate indices, ascending
  std::vector<char> executed;
  int remaining = 0;
  std::vector<double> decay;
  int stuck = 0;

  // Reused scratch; per-swap allocation would dominate large routes.
  std::vector<int> seen_stamp;
  int stamp = 0;
  std::vector<std::vector<int>> front_of_qubit, ext_of_qubit;

  Router(const Circuit& circ, const HardwareSpec& hw, const Layout& l, const RouteParams& p)
      : c(circ), spec(hw), params(p), layout(l) {
    layout.check(spec.traps());
    if (layout.n() != c.n) throw std::invalid_argument("layout size does not match circuit");
    out.n = c.n;
    out.initial = layout;
    build_graph();
    dag = build_dag(c);
    indeg = dag.indegree;
    executed.assign(c.gates.size(), 0);
    remaining = static_cast<int>(c.gates.size());
    for (int g = 0; g < dag.num_gates; ++g)
      if (indeg[g] == 0) front.push_back(g);
    decay.assign(c.n, 0.0);
    precheck();
  }

  void build_graph() {
    occ.clear();
    occ_index.assign(spec.traps(), -1);
    for (int t = 0; t < spec.traps(); ++t)
      if (layout.qubit_at(t) >= 0) {
        occ_index[t] = static_cast<int>(occ.size());
        occ.push_back(t);
      }
    int m = static_cast<int>(occ.size());
    adj.assign(m, {});
    edges.clear();
    double r = spec.r_int_um();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (distance_um(spec.trap_position(occ[i]), spec.trap_position(occ[j])) <= r) {
          adj[i].push_back(j);
          adj[j].push_back(i);
          edges.push_back({i, j});
        }
    hops.assign(m, std::vector<int>(m, kInfHops));
    std::vector<int> queue;
    for (int s = 0; s < m; ++s) {
      hops[s][s] = 0;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[u])
          if (hops[s][v] == kInfHops) {
            hops[s][v] = hops[s][u] + 1;
            queue.push_back(v);
          }
      }
    }
  }

  int oi(int trap) const { return occ_index[trap]; }

  bool executable(int g) const {
    const std::vector<int>& ops = c.gates[g].operands;
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j)
        if (hops[oi(layout.trap_of(ops[i]))][oi(layout.trap_of(ops[j]))] != 1) return false;
    return true;
  }

  long long hop_sum(int g) const {
    const std::vector<int>& ops = c.gates[g].operands;
    long long sum = 0;
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j)
        sum += hops[oi(layout.trap_of(ops[i]))][oi(layout.trap_of(ops[j]))];
    return sum;
  }

  // Every entangling gate needs its operands in one component, and every
  // arity-k gate needs some k traps of the occupied set pairwise within r_int.
  void precheck() {
    bool need3 = false, need4 = false;
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
      const std::vector<int>& ops = c.gates[g].operands;
      for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
          if (hops[oi(layout.trap_of(ops[i]))][oi(layout.trap_of(ops[j]))] >= kInfHops)
            throw RoutingError("gate " + std::to_string(g) +
                               ": operands lie in disconnected occupied regions");
      if (ops.size() == 3) need3 = true;
      if (ops.size() == 4) need4 = true;
    }
    if (need3 && find_cliques(3).empty())
      throw RoutingError("no 3 occupied traps are pairwise within the interaction radius");
    if (need4 && find_cliques(4).empty())
      throw RoutingError("no 4 occupied traps are pairwise within the interaction radius");
  }

  std::vector<std::vector<int>> find_cliques(int k) const {
    std::vector<std::vector<int>> result;
    int m = static_cast<int>(occ.size());
    auto connected = [&](int a, int b) { return hops[a][b] == 1; };
    for (int a = 0; a < m; ++a)
      for (std::size_t bi = 0; bi < adj[a].size(); ++bi) {
        int b = adj[a][bi];
        if (b <= a) continue;
        if (k == 2) {
          result.push_back({a, b});
          continue;
        }
        for (std::size_t ci = bi + 1; ci < adj[a].size(); ++ci) {
          int cc = adj[a][ci];
          if (cc <= a || !connected(b, cc)) continue;
          if (k == 3) {
            result.push_back({a, b, cc});
            continue;
          }
          for (std::size_t di = ci + 1; di < adj[a].size(); ++di) {
            int d = adj[a][di];
            if (d <= a || !connected(b, d) || !connected(cc, d)) continue;
            result.push_back({a, b, cc, d});
          }
        }
      }
    return result;
  }

  void emit(int g) {
    const Gate& gate = c.gates[g];
    HwGate hw;
    hw.kind = gate.kind;
    hw.qubits = gate.operands;
    for (int q : gate.operands) hw.traps.push_back(layout.trap_of(q));
    hw.src_gate = g;
    out.gates.push_back(std::move(hw));
    if (gate.kind.tag == GateTag::SWAP)
      layout.swap_traps(layout.trap_of(gate.operands[0]), layout.trap_of(gate.operands[1]));
    executed[g] = 1;
    --remaining;
    for (int s : dag.succ[g])
      if (--indeg[s] == 0) front.push_back(s);
  }

  // Execute every ready gate that fits the interaction rule; returns whether
  // anything ran. 1-qubit gates always fit. emit() appends newly-ready
  // successors to `front`, so iterate over a drained copy and leave `front`
  // holding only the still-blocked gates plus those successors.
  bool drain() {
    bool any = false;
    bool progressed = true;
    while (progressed) {
      progressed = false;
      std::sort(front.begin(), front.end());
      std::vector<int> ready;
      ready.swap(front);
      for (int g : ready) {
        if (c.gates[g].operands.size() < 2 || executable(g)) {
          emit(g);
          progressed = true;
          any = true;
        } else {
          front.push_back(g);
        }
      }
    }
    if (any) {
      std::fill(decay.begin(), decay.end(), 0.0);
      stuck = 0;
    }
    return any;
  }

  void apply_swap(int ta, int tb) {
    int qa = layout.qubit_at(ta);
    int qb = layout.qubit_at(tb);
    HwGate hw;
    hw.kind = GateKind::swap();
    hw.traps = {ta, tb};
    hw.qubits = {qa, qb};
    hw.src_gate = -1;
    out.gates.push_back(std::move(hw));
    layout.swap_traps(ta, tb);
    ++out.n_swaps;
    decay[qa] += params.decay;
    decay[qb] += params.decay;
    ++stuck;
  }

  // Up to lookahead_size entangling gates downstream of the front layer, in
  // breadth-first dependency order.
  std::vector<int> extended_set() {
    std::vector<int> result;
    if (seen_stamp.size() != c.gates.size()) seen_stamp.assign(c.gates.size(), 0);
    ++stamp;
    std::vector<int> frontier = front;
    while (!frontier.empty() && static_cast<int>(result.size()) < params.lookahead_size) {
      std::vector<int> next;
      for (int g : frontier)
        for (int s : dag.succ[g])
          if (!executed[s] && seen_stamp[s] != stamp) {
            seen_stamp[s] = stamp;
            next.push_back(s);
          }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (int g : next) {
        if (c.gates[g].operands.size() >= 2) result.push_back(g);
        if (static_cast<int>(result.size()) >= params.lookahead_size) break;
      }
      frontier = std::move(next);
    }
    return result;
  }

  void pick_and_apply_swap() {
    std::vector<int> ext = extended_set();
    // Base hop sums plus, per qubit, the gates a candidate swap affects.
    if (front_of_qubit.empty()) {
      front_of_qubit.resize(c.n);
      ext_of_qubit.resize(c.n);
    }
    for (auto& v : front_of_qubit) v.clear();
    for (auto& v : ext_of_qubit) v.clear();
    long long front_base = 0, ext_base = 0;
    for (int g : front) {
      front_base += hop_sum(g);
      for (int q : c.gates[g].operands) front_of_qubit[q].push_back(g);
    }
    for (int g : ext) {
      ext_base += hop_sum(g);
      for (int q : c.gates[g].operands) ext_of_qubit[q].push_back(g);
    }

    std::vector<char> is_front_trap(occ.size(), 0);
    for (int g : front)
      for (int q : c.gates[g].operands) is_front_trap[oi(layout.trap_of(q))] = 1;

    // Affected gates, deduplicated (a gate may touch both swapped qubits).
    std::vector<int> affected;
    auto collect = [&](const std::vector<std::vector<int>>& of_qubit, int qa, int qb) {
      affected.clear();
      for (int g : of_qubit[qa]) affected.push_back(g);
      for (int g : of_qubit[qb])
        if (std::find(affected.begin(), affected.end(), g) == affected.end())
          affected.push_back(g);
    };
    auto sum_affected = [&]() {
      long long s = 0;
      for (int g : affected) s += hop_sum(g);
      return s;
    };

    double best_score = 0.0;
    int best_a = -1, best_b = -1;
    for (const auto& [a, b] : edges) {
      if (!is_front_trap[a] && !is_front_trap[b]) continue;
      int qa = layout.qubit_at(occ[a]);
      int qb = layout.qubit_at(occ[b]);

      collect(front_of_qubit, qa, qb);
      long long front_old = sum_affected();
      layout.swap_traps(occ[a], occ[b]);
      long long front_new = sum_affected();
      layout.swap_traps(occ[a], occ[b]);
      long long front_sum = front_base - front_old + front_new;

      long long ext_sum = ext_base;
      if (!ext.empty()) {
        collect(ext_of_qubit, qa, qb);
        long long ext_old = sum_affected();
        layout.swap_traps(occ[a], occ[b]);
        long long ext_new = sum_affected();
        layout.swap_traps(occ[a], occ[b]);
        ext_sum += ext_new - ext_old;
      }

      double score = static_cast<double>(front_sum) / static_cast<double>(front.size());
      if (!ext.empty())
        score += params.lookahead_weight * static_cast<double>(ext_sum) /
                 static_cast<double>(ext.size());
      score *= 1.0 + std::max(decay[qa], decay[qb]);
      if (best_a < 0 || score < best_score) {
        best_score = score;
        best_a = a;
        best_b = b;
      }
    }
    if (best_a < 0)
      throw RoutingError("no usable swap: the blocked gates' traps have no occupied neighbors");
    apply_swap(occ[best_a], occ[best_b]);
  }

  // Path of occupied traps from src to dst; `avoid` traps are impassable
  // (endpoints exempt). Empty result = no path.
  std::vector<int> occ_path(int src, int dst, const std::vector<char>& avoid) const {
    int m = static_cast<int>(occ.size());
    std::vector<int> prev(m, -2);
    std::vector<int> queue{src};
    prev[src] = -1;
    for (std::size_t head = 0; head < queue.size() && prev[dst] == -2; ++head) {
      int u = queue[head];
      for (int v : adj[u]) {
        if (prev[v] != -2) continue;
        if (v != dst && avoid[v]) continue;
        prev[v] = u;
        queue.push_back(v);
      }
    }
    if (prev[dst] == -2) return {};
    std::vector<int> path;
    for (int u = dst; u != -1; u = prev[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Deterministic fallback when greedy swapping stalls: walk the lowest-index
  // blocked gate's operands into an explicit placement.
  void force_route() {
    std::sort(front.begin(), front.end());
    int g = front.front();
    const std::vector<int>& ops = c.gates[g].operands;
    int k = static_cast<int>(ops.size());
    if (k == 2) {
      std::vector<char> avoid(occ.size(), 0);
      int src = oi(layout.trap_of(ops[0]));
      int dst = oi(layout.trap_of(ops[1]));
      std::vector<int> path = occ_path(src, dst, avoid);
      if (path.size() < 2) throw RoutingError("blocked pair has no connecting path");
      for (std::size_t i = 0; i + 2 < path.size(); ++i)
        apply_swap(occ[path[i]], occ[path[i + 1]]);
      return;
    }
    // Choose the k-clique (occupied, pairwise within r_int) with the smallest
    // total hop distance from the operands' current traps, assigning slots by
    // the best permutation.
    std::vector<std::vector<int>> cliques = find_cliques(k);
    if (cliques.empty()) throw RoutingError("no feasible multi-qubit placement");
    long long best_cost = -1;
    std::vector<int> best_slots;  // slot i receives operand i
    for (const std::vector<int>& clique : cliques) {
      std::vector<int> perm = clique;
      std::sort(perm.begin(), perm.end());
      do {
        long long cost = 0;
        for (int i = 0; i < k; ++i) cost += hops[oi(layout.trap_of(ops[i]))][perm[i]];
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_slots = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<char> locked(occ.size(), 0);
    for (int i = 0; i < k; ++i) {
      int src = oi(layout.trap_of(ops[i]));
      int dst = best_slots[i];
      if (src == dst) {
        locked[dst] = 1;
        continue;
      }
      std::vector<int> path = occ_path(src, dst, locked);
      if (path.empty()) throw RoutingError("could not assemble multi-qubit placement");
      for (std::size_t s = 0; s + 1 < path.size(); ++s)
        apply_swap(occ[path[s]], occ[path[s + 1]]);
      locked[dst] = 1;
    }
  }

  MappedCircuit run() {
    drain();
    int threshold = std::max<int>(100, 10 * static_cast<int>(occ.size()));
    while (remaining > 0) {
      if (front.empty()) throw RoutingError("dependency front emptied with gates remaining");
      if (stuck >= threshold) {
        force_route();
        if (!drain()) throw RoutingError("forced placement failed to unblock routing");
        continue;
      }
      pick_and_apply_swap();
      drain();
    }
    out.final_layout = layout;
    return std::move(out);
  }
};

}  // namespace

MappedCircuit route(const Circuit& c, const HardwareSpec& spec, const Layout& layout,
                    const RouteParams& params) {
  c.check();
  Router router(c, spec, layout, params);
  return router.run();
}

std::vector<Violation> verify(const MappedCircuit& m, const HardwareSpec& spec) {
  std::vector<Violation> out;
  double r = spec.r_int_um();
  for (std::size_t i = 0; i < m.gates.size(); ++i) {
    const HwGate& g = m.gates[i];
    if (g.traps.size() != g.qubits.size()) {
      out.push_back({static_cast<int>(i), "trap/qubit operand count mismatch"});
      continue;
    }
    for (std::size_t a = 0; a < g.traps.size(); ++a)
      for (std::size_t b = a + 1; b < g.traps.size(); ++b) {
        if (g.traps[a] == g.traps[b]) {
          out.push_back({static_cast<int>(i), "duplicate trap operand"});
          continue;
        }
        double dist = distance_um(spec.trap_position(g.traps[a]), spec.trap_position(g.traps[b]));
        if (dist > r)
          out.push_back({static_cast<int>(i),
                         "operands " + std::to_string(dist) + " um apart exceed the interaction radius"});
      }
  }
  return out;
}

}  // namespace atomc
