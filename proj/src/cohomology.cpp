#include "sftkit/cohomology.hpp"

#include <algorithm>
#include <map>

namespace sftkit {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

std::variant<Potential, NegativeCycleWitness> find_potential(const WeightedDigraph& W) {
  const auto n = W.node_count;
  std::vector<Value> dist(n, 0);
  std::vector<std::size_t> pred(n, kNone);
  std::size_t last_updated = kNone;
  for (std::size_t round = 0; round < n; ++round) {
    last_updated = kNone;
    for (std::size_t a = 0; a < W.arcs.size(); ++a) {
      const auto& arc = W.arcs[a];
      if (dist[arc.from] + arc.weight < dist[arc.to]) {
        dist[arc.to] = dist[arc.from] + arc.weight;
        pred[arc.to] = a;
        last_updated = arc.to;
      }
    }
    if (last_updated == kNone) return Potential{dist};
  }
  if (last_updated == kNone) return Potential{dist};
  // Still relaxing after n rounds: walk back onto the cycle, then collect it.
  auto v = last_updated;
  for (std::size_t i = 0; i < n; ++i) v = W.arcs[pred[v]].from;
  NegativeCycleWitness witness;
  auto u = v;
  do {
    witness.arcs.push_back(pred[u]);
    u = W.arcs[pred[u]].from;
  } while (u != v);
  std::reverse(witness.arcs.begin(), witness.arcs.end());
  for (auto a : witness.arcs) {
    witness.sum += W.arcs[a].weight;
    if (!W.arcs[a].label.empty()) witness.cycle_word.push_back(W.arcs[a].label.front());
  }
  return witness;
}

bool potential_valid(const WeightedDigraph& W, const Potential& p) {
  if (p.kappa.size() != W.node_count) return false;
  return std::all_of(W.arcs.begin(), W.arcs.end(), [&](const Arc& a) {
    return a.weight + p.kappa[a.from] - p.kappa[a.to] >= 0;
  });
}

bool witness_valid(const WeightedDigraph& W, const NegativeCycleWitness& c) {
  if (c.arcs.empty()) return false;
  Value sum = 0;
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    if (c.arcs[i] >= W.arcs.size()) return false;
    const auto& a = W.arcs[c.arcs[i]];
    const auto& next = W.arcs[c.arcs[(i + 1) % c.arcs.size()]];
    if (a.to != next.from) return false;
    sum += a.weight;
  }
  return sum == c.sum && sum < 0;
}

WeightedDigraph transition_graph(const CylinderFunction& f) {
  const auto& P = f.presentation();
  const std::size_t m = std::max<std::size_t>(f.depth() == 0 ? 0 : f.depth() - 1, 1);
  const auto fr = f.refine(m + 1);
  WeightedDigraph W;
  W.block_length = m;
  W.node_labels = language(P, m);
  W.node_count = W.node_labels.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < W.node_labels.size(); ++i) index[W.node_labels[i]] = i;
  for (const auto& w : language(P, m + 1)) {
    W.arcs.push_back({index.at(slice(w, 0, m)), index.at(slice(w, 1, m + 1)), fr(w), w});
  }
  return W;
}

bool certificate_valid(const CylinderFunction& f, const PositivityCertificate& c) {
  if (!c.n.nonnegative()) return false;
  return c.n + c.b.coboundary() == f;
}

std::variant<PositivityCertificate, NegativeCycleWitness> class_is_positive(const CylinderFunction& f) {
  const auto W = transition_graph(f);
  auto result = find_potential(W);
  if (auto* w = std::get_if<NegativeCycleWitness>(&result)) return *w;
  const auto& kappa = std::get<Potential>(result).kappa;
  std::map<Word, Value> b_table, n_table;
  for (std::size_t v = 0; v < W.node_count; ++v) b_table[W.node_labels[v]] = -kappa[v];
  for (const auto& a : W.arcs) n_table[a.label] = a.weight + kappa[a.from] - kappa[a.to];
  const auto& P = f.presentation_ptr();
  return PositivityCertificate{CylinderFunction::from_table(P, W.block_length, b_table),
                               CylinderFunction::from_table(P, W.block_length + 1, n_table)};
}

Decomposition decompose_positive(const CylinderFunction& f, const std::optional<CylinderFunction>& lower_bound) {
  auto result = class_is_positive(f);
  if (auto* w = std::get_if<NegativeCycleWitness>(&result)) throw NotPositiveClassError(*w);
  auto& cert = std::get<PositivityCertificate>(result);
  const auto u = lower_bound ? *lower_bound : CylinderFunction::constant(f.presentation_ptr(), 0);
  const auto gap = u - cert.b;
  const Value shift = gap.max_value();
  return {cert.n, cert.b + shift, shift};
}

std::optional<CylinderFunction> solve_coboundary(const CylinderFunction& g, std::size_t max_depth) {
  const auto& P = g.presentation();
  const std::size_t start = std::max<std::size_t>(g.window() - 1, 1);
  for (std::size_t D = start; D <= std::max(start, max_depth); ++D) {
    const auto nodes = language(P, D);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
    // b(s) - b(t) = g(w) on every (D+1)-block w from s to t.
    struct Edge {
      std::size_t other;
      Value delta;  // b(other) = b(self) + delta
    };
    std::vector<std::vector<Edge>> adj(nodes.size());
    const auto gr = g.refine(D + 1);
    for (const auto& w : language(P, D + 1)) {
      const auto s = index.at(slice(w, 0, D));
      const auto t = index.at(slice(w, 1, D + 1));
      adj[s].push_back({t, -gr(w)});
      adj[t].push_back({s, gr(w)});
    }
    std::vector<std::optional<Value>> b(nodes.size());
    bool consistent = true;
    for (std::size_t root = 0; root < nodes.size() && consistent; ++root) {
      if (b[root]) continue;
      b[root] = 0;
      std::vector<std::size_t> stack{root};
      while (!stack.empty() && consistent) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto& e : adj[v]) {
          const Value want = *b[v] + e.delta;
          if (!b[e.other]) {
            b[e.other] = want;
            stack.push_back(e.other);
          } else if (*b[e.other] != want) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (!consistent) continue;
    std::map<Word, Value> table;
    for (std::size_t i = 0; i < nodes.size(); ++i) table[nodes[i]] = *b[i];
    return CylinderFunction::from_table(g.presentation_ptr(), D, table);
  }
  return std::nullopt;
}

}  // namespace sftkit
