#include "pdvass/graph_summary.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace pdvass::graph {

Int ExtInt::value() const {
  if (!is_finite()) throw PreconditionError("value() of a non-finite ExtInt");
  return value_;
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-INF";
    case Kind::Omega:
      return "OMEGA";
    case Kind::Finite:
      break;
  }
  return std::to_string(value_);
}

SummaryValue extend(const SummaryValue& p, Int c) {
  if (p.is_none()) return p;
  if (p.b.is_omega()) return p;
  Int w = checked_add(p.b.value(), c);
  return {std::min(p.a, ExtInt::finite(w)), ExtInt::finite(w)};
}

void WeightedGraph::add_edge(std::size_t from, std::size_t to, Int weight) {
  if (from >= nodes_ || to >= nodes_) throw PreconditionError("edge endpoint out of range");
  edges_.push_back({from, to, weight});
}

std::vector<std::size_t> WeightedGraph::components() const {
  std::vector<std::size_t> parent(nodes_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    std::size_t a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> id(nodes_);
  for (std::size_t v = 0; v < nodes_; ++v) id[v] = find(v);
  return id;
}

bool WeightedGraph::components_strongly_connected() const {
  // Weak components are strong iff every edge lies on a cycle, i.e. iff the
  // endpoints of each edge share a strongly connected component.
  std::vector<std::vector<std::size_t>> out(nodes_), in(nodes_);
  for (const auto& e : edges_) {
    out[e.from].push_back(e.to);
    in[e.to].push_back(e.from);
  }
  auto comp = components();
  std::vector<char> seen_fwd(nodes_, 0), seen_bwd(nodes_, 0);
  auto flood = [&](std::size_t root, const std::vector<std::vector<std::size_t>>& adj, std::vector<char>& seen) {
    std::vector<std::size_t> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  };
  for (std::size_t v = 0; v < nodes_; ++v) {
    if (comp[v] != v) continue;  // v is the root of its weak component
    flood(v, out, seen_fwd);
    flood(v, in, seen_bwd);
  }
  for (std::size_t v = 0; v < nodes_; ++v)
    if (!seen_fwd[v] || !seen_bwd[v]) return false;
  return true;
}

namespace {

// Maximizing Bellman-Ford from a virtual source joined to every node with
// weight 0, kept alive across cycle removals. The predecessor graph is
// inspected after every round; any cycle in it is positive. Distances from a
// previous round stay valid lower bounds after edges are deleted, and a
// positive cycle always leaves some edge relaxable, so restarting is not
// needed.
class PositiveCycleFinder {
 public:
  PositiveCycleFinder(std::size_t n, const std::vector<Edge>& edges)
      : n_(n), edges_(edges), alive_(edges.size(), true), dist_(n, 0), pred_(n, kNone), stamp_(n, kNone) {}

  // Edge indices of a positive cycle in path order; empty when none is left.
  std::vector<std::size_t> next() {
    const std::size_t cap = (n_ + 2) * (edges_.size() + 2) * 4;
    for (std::size_t round = 0; round < cap; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!alive_[i]) continue;
        const auto& e = edges_[i];
        Int cand = dist_[e.from] + e.weight;
        if (cand > dist_[e.to]) {
          dist_[e.to] = cand;
          pred_[e.to] = i;
          changed = true;
        }
      }
      if (!changed) return {};
      if (auto c = pred_cycle(); !c.empty()) return c;
    }
    throw Error("Bellman-Ford did not settle within its round cap");
  }

  void remove_out_edges(std::size_t x) {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].from == x) alive_[i] = false;
    for (auto& p : pred_)
      if (p != kNone && edges_[p].from == x) p = kNone;
  }

  const std::vector<bool>& alive() const { return alive_; }

 private:
  static constexpr auto kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> pred_cycle() {
    std::fill(stamp_.begin(), stamp_.end(), kNone);
    for (std::size_t start = 0; start < n_; ++start) {
      std::size_t x = start;
      while (x != kNone && stamp_[x] == kNone) {
        stamp_[x] = start;
        x = pred_[x] == kNone ? kNone : edges_[pred_[x]].from;
      }
      if (x == kNone || stamp_[x] != start) continue;
      std::vector<std::size_t> cycle;
      std::size_t y = x;
      do {
        cycle.push_back(pred_[y]);
        y = edges_[pred_[y]].from;
      } while (y != x);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
    return {};
  }

  std::size_t n_;
  const std::vector<Edge>& edges_;
  std::vector<bool> alive_;
  std::vector<Int> dist_;
  std::vector<std::size_t> pred_;
  std::vector<std::size_t> stamp_;
};

}  // namespace

Stripped strip_positive_cycles(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  const auto& edges = g.edges();
  PositiveCycleFinder finder(n, edges);
  Stripped out;
  for (;;) {
    auto cycle = finder.next();
    if (cycle.empty()) break;
    Int total = 0;
    for (std::size_t e : cycle) total += edges[e].weight;
    if (total <= 0) throw Error("predecessor cycle with non-positive weight");
    // Canonical rotation: start at the least node id.
    std::size_t start = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i)
      if (edges[cycle[i]].from < edges[cycle[start]].from) start = i;
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(start), cycle.end());
    // First index attaining the least prefix sum.
    Int prefix = 0, best = 0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (prefix < best) {
        best = prefix;
        best_index = i;
      }
      prefix += edges[cycle[i]].weight;
    }
    std::size_t x = edges[cycle[best_index]].from;
    out.critical.push_back(x);
    finder.remove_out_edges(x);
  }
  out.graph = WeightedGraph(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (finder.alive()[i]) out.graph.add_edge(edges[i].from, edges[i].to, edges[i].weight);
  return out;
}

namespace {

// Inserts (m, w) unless dominated; drops pairs it dominates.
bool merge(Frontier& f, std::pair<Int, Int> p) {
  for (const auto& q : f)
    if (q.first >= p.first && q.second >= p.second) return false;
  std::erase_if(f, [&](const auto& q) { return q.first <= p.first && q.second <= p.second; });
  auto pos = std::find_if(f.begin(), f.end(), [&](const auto& q) { return q.first < p.first; });
  f.insert(pos, p);
  return true;
}

std::vector<Frontier> relax(std::size_t n, const std::vector<std::vector<Edge>>& out, std::size_t u) {
  std::vector<Frontier> f(n);
  f[u].push_back({0, 0});
  std::deque<std::size_t> queue{u};
  std::vector<char> queued(n, 0);
  queued[u] = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    queued[x] = 0;
    Frontier snapshot = f[x];
    for (const auto& e : out[x]) {
      bool changed = false;
      for (const auto& [m, w] : snapshot) {
        Int nw = w + e.weight;
        changed |= merge(f[e.to], {std::min(m, nw), nw});
      }
      if (changed && !queued[e.to]) {
        queued[e.to] = 1;
        queue.push_back(e.to);
      }
    }
  }
  return f;
}

std::vector<std::vector<Edge>> out_lists(const WeightedGraph& g) {
  std::vector<std::vector<Edge>> out(g.node_count());
  for (const auto& e : g.edges()) out[e.from].push_back(e);
  return out;
}

}  // namespace

std::vector<Frontier> relax_frontiers(const WeightedGraph& g, std::size_t u) {
  if (u >= g.node_count()) throw PreconditionError("source node out of range");
  return relax(g.node_count(), out_lists(g), u);
}

SummaryEngine::SummaryEngine(const WeightedGraph& g) {
  if (!g.components_strongly_connected())
    throw PreconditionError("graph has a weakly connected component that is not strongly connected");
  component_ = g.components();
  stripped_ = strip_positive_cycles(g);
  is_critical_.assign(g.node_count(), false);
  for (std::size_t x : stripped_.critical) is_critical_[x] = true;
}

SummaryRow SummaryEngine::row(std::size_t u) const {
  const std::size_t n = component_.size();
  if (u >= n) throw PreconditionError("source node out of range");
  auto frontiers = relax_frontiers(stripped_.graph, u);
  SummaryRow r;
  r.gamma.assign(n, SummaryValue::none());
  for (std::size_t x = 0; x < n; ++x)
    if (is_critical_[x] && !frontiers[x].empty())
      r.delta = std::max(r.delta, ExtInt::finite(frontiers[x].front().first));
  for (std::size_t v = 0; v < n; ++v) {
    if (component_[v] != component_[u]) continue;
    ExtInt a = ExtInt::neg_inf();
    ExtInt b = ExtInt::neg_inf();
    if (!frontiers[v].empty()) {
      a = ExtInt::finite(frontiers[v].front().first);
      b = ExtInt::finite(frontiers[v].front().second);
    }
    if (r.delta.is_neg_inf() && a.is_neg_inf()) continue;
    r.gamma[v] = a <= r.delta ? SummaryValue{r.delta, ExtInt::omega()} : SummaryValue{a, b};
  }
  return r;
}

SummaryRow summaries(const WeightedGraph& g, std::size_t u) { return SummaryEngine(g).row(u); }

void write_frontiers(std::ostream& out, const std::vector<Frontier>& frontiers) {
  for (std::size_t v = 0; v < frontiers.size(); ++v) {
    if (frontiers[v].empty()) continue;
    out << v << '\t';
    for (std::size_t i = 0; i < frontiers[v].size(); ++i)
      out << (i ? " " : "") << frontiers[v][i].first << ',' << frontiers[v][i].second;
    out << '\n';
  }
}

}  // namespace pdvass::graph
