#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace oracle {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void fill(std::size_t d, Int k, bool oneNorm, Vec& cur, Int used, std::vector<Vec>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  Int top = oneNorm ? k - used : k;
  for (Int x = 0; x <= top; ++x) {
    cur.push_back(x);
    fill(d, k, oneNorm, cur, used + x, out);
    cur.pop_back();
  }
}

Int norm1(const Vec& v) {
  Int s = 0;
  for (Int x : v) s += x < 0 ? -x : x;
  return s;
}

}  // namespace

std::vector<Vec> box(std::size_t d, Int k) {
  std::vector<Vec> out;
  Vec cur;
  fill(d, k, false, cur, 0, out);
  return out;
}

std::vector<Vec> simplex(std::size_t d, Int k) {
  std::vector<Vec> out;
  Vec cur;
  fill(d, k, true, cur, 0, out);
  return out;
}

RewriteClosure::RewriteClosure(const std::vector<std::pair<Vec, Vec>>& pairs, std::size_t d, Int bound)
    : d_(d), bound_(bound), points_(simplex(d, bound)) {
  parent_.resize(points_.size());
  std::iota(parent_.begin(), parent_.end(), 0);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Vec& x = points_[i];
    for (const auto& [u, v] : pairs) {
      Vec y(d);
      bool ok = true;
      for (std::size_t k = 0; k < d; ++k) {
        y[k] = x[k] - u[k] + v[k];
        if (x[k] < u[k]) ok = false;
      }
      if (!ok || norm1(y) > bound_) continue;
      std::size_t a = find(i), b = find(index(y));
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }
}

std::size_t RewriteClosure::index(const Vec& v) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), v);
  if (it == points_.end() || *it != v) throw std::out_of_range("point outside the rewrite region");
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t RewriteClosure::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool RewriteClosure::related(const Vec& s, const Vec& t) const { return find(index(s)) == find(index(t)); }

std::size_t RewriteClosure::classes() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) n += find(i) == i;
  return n;
}

bool in_monoid(const std::vector<Vec>& gens, const Vec& v) {
  std::set<Vec> seen{Vec(v.size(), 0)};
  std::deque<Vec> todo{Vec(v.size(), 0)};
  while (!todo.empty()) {
    Vec x = todo.front();
    todo.pop_front();
    if (x == v) return true;
    for (const Vec& g : gens) {
      Vec y = x;
      bool fits = true;
      for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] += g[k];
        if (y[k] > v[k]) fits = false;
      }
      if (fits && seen.insert(y).second) todo.push_back(y);
    }
  }
  return false;
}

bool linear_member_enum(const Vec& base, const std::vector<Vec>& periods, const Vec& v, Int k) {
  for (const Vec& lambda : box(periods.size(), k)) {
    Vec x = base;
    for (std::size_t i = 0; i < periods.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += lambda[i] * periods[i][j];
    if (x == v) return true;
  }
  return false;
}

std::vector<Vec> dio_solutions(const std::vector<Vec>& rows, std::size_t cols, const Vec& b, Int k) {
  std::vector<Vec> out;
  for (const Vec& z : box(cols, k)) {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += rows[i][j] * z[j];
      ok = s == b[i];
    }
    if (ok) out.push_back(z);
  }
  return out;
}

DpRow dp_summaries(std::size_t nodes, const std::vector<Arc>& arcs, std::size_t u, Int floor, Int clamp) {
  // (node, min, weight); weight == clamp + 1 encodes omega.
  const Int omega = clamp + 1;
  std::set<std::tuple<std::size_t, Int, Int>> seen;
  std::deque<std::tuple<std::size_t, Int, Int>> todo;
  seen.insert({u, 0, 0});
  todo.push_back({u, 0, 0});
  while (!todo.empty()) {
    auto [x, m, w] = todo.front();
    todo.pop_front();
    for (const Arc& e : arcs) {
      if (e.from != x) continue;
      Int m2 = m, w2 = omega;
      if (w != omega) {
        w2 = w + e.weight;
        m2 = std::min(m, w2);
        if (m2 < floor) continue;
        if (w2 > clamp) w2 = omega;
      }
      if (seen.insert({e.to, m2, w2}).second) todo.push_back({e.to, m2, w2});
    }
  }
  DpRow row;
  row.gamma.resize(nodes);
  for (const auto& [x, m, w] : seen) {
    DpValue& g = row.gamma[x];
    if (!g.reachable || m > g.a) {
      g = {true, m, w == omega ? 0 : w, w == omega};
    } else if (m == g.a && !g.omega) {
      if (w == omega)
        g = {true, m, 0, true};
      else
        g.b = std::max(g.b, w);
    }
    if (x == u && w > 0 && (!row.delta || m > *row.delta)) row.delta = m;
  }
  return row;
}

std::optional<Int> best_arc(const std::vector<Arc>& arcs, std::size_t from, std::size_t to) {
  std::optional<Int> best;
  for (const Arc& e : arcs)
    if (e.from == from && e.to == to && (!best || e.weight > *best)) best = e.weight;
  return best;
}

namespace {

void cycles_from(std::size_t start, std::size_t x, const std::vector<std::vector<std::size_t>>& succ,
                 std::vector<bool>& on, std::vector<std::size_t>& path, std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t y : succ[x]) {
    if (y == start) {
      out.push_back(path);
    } else if (y > start && !on[y]) {
      on[y] = true;
      path.push_back(y);
      cycles_from(start, y, succ, on, path, out);
      path.pop_back();
      on[y] = false;
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> simple_cycles(std::size_t nodes, const std::vector<Arc>& arcs) {
  std::vector<std::vector<std::size_t>> succ(nodes);
  for (const Arc& e : arcs) succ[e.from].push_back(e.to);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < nodes; ++s) {
    std::vector<bool> on(nodes, false);
    on[s] = true;
    std::vector<std::size_t> path{s};
    cycles_from(s, s, succ, on, path, out);
  }
  return out;
}

namespace {

void walk(std::size_t x, Int m, Int w, std::size_t left, std::size_t v, const std::vector<Arc>& arcs,
          std::set<std::pair<Int, Int>>& found) {
  if (x == v) found.insert({m, w});
  if (left == 0) return;
  for (const Arc& e : arcs)
    if (e.from == x) walk(e.to, std::min(m, w + e.weight), w + e.weight, left - 1, v, arcs, found);
}

}  // namespace

std::vector<std::pair<Int, Int>> path_frontier(std::size_t, const std::vector<Arc>& arcs, std::size_t u,
                                               std::size_t v, std::size_t maxLength) {
  std::set<std::pair<Int, Int>> found;
  walk(u, 0, 0, maxLength, v, arcs, found);
  std::vector<std::pair<Int, Int>> out;
  for (const auto& p : found) {
    bool dominated = false;
    for (const auto& q : found)
      if (q != p && q.first >= p.first && q.second >= p.second) dominated = true;
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return out;
}

std::set<std::pair<Int, Int>> run_summaries(const pdvass::model::Machine& m, pdvass::model::StateId p,
                                            pdvass::model::StateId q, Int weightMax, std::size_t stackMax) {
  using pdvass::model::OpKind;
  using Key = std::tuple<pdvass::model::StateId, Int, Int, std::vector<pdvass::model::SymbolId>>;
  std::set<Key> seen;
  std::deque<Key> todo;
  seen.insert({p, 0, 0, {}});
  todo.push_back({p, 0, 0, {}});
  std::set<std::pair<Int, Int>> out;
  while (!todo.empty()) {
    auto [s, w, mn, stack] = todo.front();
    todo.pop_front();
    if (s == q && stack.empty()) out.insert({mn, w});
    for (const auto& t : m.transitions()) {
      if (t.from != s) continue;
      auto st = stack;
      if (t.op.kind == OpKind::Push) {
        if (st.size() >= stackMax) continue;
        st.push_back(t.op.symbol);
      } else if (t.op.kind == OpKind::Pop) {
        if (st.empty() || st.back() != t.op.symbol) continue;
        st.pop_back();
      }
      Int w2 = w + t.effect[0];
      if (w2 > weightMax || w2 < -weightMax) continue;
      Key next{t.to, w2, std::min(mn, w2), std::move(st)};
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace oracle
