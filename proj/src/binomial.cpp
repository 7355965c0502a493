#include "pdvass/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pdvass::binomial {

MonomialOrder MonomialOrder::eliminating(const std::vector<std::size_t>& eliminated, std::size_t n) {
  MonomialOrder o{OrderKind::Block, {}, eliminated.size()};
  std::vector<bool> in(n, false);
  for (std::size_t v : eliminated) {
    if (v >= n) throw PreconditionError("eliminated variable out of range");
    in[v] = true;
  }
  std::vector<std::size_t> sorted = eliminated;
  std::sort(sorted.begin(), sorted.end());
  o.priority = sorted;
  for (std::size_t v = 0; v < n; ++v)
    if (!in[v]) o.priority.push_back(v);
  return o;
}

namespace {

std::strong_ordering compare_graded(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
  Int da = 0, db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (auto c = da <=> db; c != 0) return c;
  for (std::size_t v : vars)
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::vector<std::size_t> vars = priority;
  if (vars.empty()) {
    vars.resize(a.size());
    std::iota(vars.begin(), vars.end(), 0);
  }
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t v : vars)
        if (auto c = a[v] <=> b[v]; c != 0) return c;
      return std::strong_ordering::equal;
    case OrderKind::GradedLex:
      return compare_graded(a, b, vars);
    case OrderKind::Block: {
      std::vector<std::size_t> head(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(blockSize));
      std::vector<std::size_t> tail(vars.begin() + static_cast<std::ptrdiff_t>(blockSize), vars.end());
      if (auto c = compare_graded(a, b, head); c != 0) return c;
      return compare_graded(a, b, tail);
    }
  }
  return std::strong_ordering::equal;
}

std::optional<Binomial> orient(const Monomial& u, const Monomial& v, const MonomialOrder& order) {
  auto c = order.compare(u, v);
  if (c == 0) return std::nullopt;
  return c > 0 ? Binomial{u, v} : Binomial{v, u};
}

namespace {

bool divides(const Monomial& a, const Monomial& b) { return vec::leq(a, b); }

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Rewrites m with the rules until no lead divides it. Each rule is applied
// as many times in a row as it divides.
Monomial reduce(Monomial m, const std::vector<Binomial>& rules, std::size_t skip = SIZE_MAX) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (r == skip) continue;
      const auto& g = rules[r];
      if (!divides(g.lead, m)) continue;
      Int k = INT64_MAX;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (g.lead[i] > 0) k = std::min(k, m[i] / g.lead[i]);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += k * (g.trail[i] - g.lead[i]);
      progress = true;
    }
  }
  return m;
}

void check_arity(const std::vector<Pair>& gens, std::size_t arity) {
  for (const auto& [u, v] : gens)
    if (u.size() != arity || v.size() != arity || !vec::is_nonneg(u) || !vec::is_nonneg(v))
      throw PreconditionError("binomial exponents must be non-negative vectors of the ambient arity");
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t arity, MonomialOrder order, std::vector<Binomial> elements)
    : arity_(arity), order_(std::move(order)), elements_(std::move(elements)) {
  for (const auto& g : elements_) {
    if (g.lead.size() != arity_ || g.trail.size() != arity_) throw PreconditionError("basis arity mismatch");
    if (order_.compare(g.lead, g.trail) <= 0) throw Error("basis element is not a properly oriented binomial");
  }
}

Monomial GroebnerBasis::normal_form(Monomial m) const { return reduce(std::move(m), elements_); }

std::optional<Binomial> GroebnerBasis::normal_form(const Monomial& u, const Monomial& v) const {
  return orient(normal_form(u), normal_form(v), order_);
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const auto& a = elements_[i];
      const auto& b = elements_[j];
      Monomial l = lcm(a.lead, b.lead);
      Monomial s1 = vec::add(vec::sub(l, a.lead), a.trail);
      Monomial s2 = vec::add(vec::sub(l, b.lead), b.trail);
      if (!reduces_to_zero(s1, s2)) return false;
    }
  return true;
}

GroebnerBasis buchberger(const std::vector<Pair>& gens, std::size_t arity, const MonomialOrder& order) {
  check_arity(gens, arity);
  std::vector<Binomial> g;
  for (const auto& [u, v] : gens) {
    auto nf = orient(reduce(u, g), reduce(v, g), order);
    if (nf) g.push_back(*nf);
  }

  struct Pending {
    Monomial lcm;
    std::size_t i, j;
  };
  std::vector<Pending> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (!coprime(g[i].lead, g[j].lead)) pairs.push_back({lcm(g[i].lead, g[j].lead), i, j});
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // Normal selection: the pair with the least lcm.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pending& a, const Pending& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pending p = *best;
    pairs.erase(best);
    Monomial s1 = vec::add(vec::sub(p.lcm, g[p.i].lead), g[p.i].trail);
    Monomial s2 = vec::add(vec::sub(p.lcm, g[p.j].lead), g[p.j].trail);
    auto nf = orient(reduce(s1, g), reduce(s2, g), order);
    if (!nf) continue;
    g.push_back(*nf);
    add_pairs_for(g.size() - 1);
  }

  // Minimize, then interreduce the trails.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].lead, g[i].lead)) continue;
      redundant = g[j].lead != g[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i].trail = reduce(minimal[i].trail, minimal, i);
  std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
    return order.compare(a.lead, b.lead) < 0;
  });
  return GroebnerBasis(arity, order, std::move(minimal));
}

bool congruence_member(const std::vector<Pair>& relations, std::size_t arity, const Vec& s, const Vec& t) {
  if (s == t) return true;
  return buchberger(relations, arity).reduces_to_zero(s, t);
}

std::vector<Pair> to_pairs(const GroebnerBasis& g) {
  std::vector<Pair> out;
  for (const auto& b : g.elements()) out.push_back({b.lead, b.trail});
  return out;
}

std::vector<Pair> eliminate(const std::vector<Pair>& gens, std::size_t arity, const std::vector<std::size_t>& keep) {
  std::vector<bool> kept(arity, false);
  for (std::size_t v : keep) {
    if (v >= arity) throw PreconditionError("kept variable out of range");
    kept[v] = true;
  }
  std::vector<std::size_t> dropped;
  for (std::size_t v = 0; v < arity; ++v)
    if (!kept[v]) dropped.push_back(v);
  if (dropped.empty()) return to_pairs(buchberger(gens, arity));
  auto g = buchberger(gens, arity, MonomialOrder::eliminating(dropped, arity));
  std::vector<Pair> out;
  for (const auto& b : g.elements()) {
    bool only_kept = true;
    for (std::size_t v : dropped) only_kept = only_kept && b.lead[v] == 0 && b.trail[v] == 0;
    if (only_kept) out.push_back({b.lead, b.trail});
  }
  return out;
}

std::vector<Pair> quotient_by_monomial(const std::vector<Pair>& gens, std::size_t arity, const Monomial& b) {
  check_arity(gens, arity);
  if (b.size() != arity || !vec::is_nonneg(b)) throw PreconditionError("quotient monomial has wrong shape");
  if (vec::is_zero(b)) return to_pairs(buchberger(gens, arity));
  // I : x^b = (I intersected with (x^b)) / x^b, and the intersection is the
  // tag-free part of t*I + (1 - t)*(x^b).
  const std::size_t tag = arity;
  std::vector<Pair> tagged;
  for (const auto& [u, v] : gens) {
    Vec tu = u, tv = v;
    tu.push_back(1);
    tv.push_back(1);
    tagged.push_back({tu, tv});
  }
  Vec xb = b, txb = b;
  xb.push_back(0);
  txb.push_back(1);
  tagged.push_back({xb, txb});
  std::vector<std::size_t> keep(arity);
  std::iota(keep.begin(), keep.end(), 0);
  std::vector<Pair> out;
  for (const auto& [u, v] : eliminate(tagged, arity + 1, keep)) {
    Vec su = vec::slice(u, 0, tag), sv = vec::slice(v, 0, tag);
    if (!vec::leq(b, su) || !vec::leq(b, sv))
      throw Error("element of the intersection is not divisible by the quotient monomial");
    out.push_back({vec::sub(su, b), vec::sub(sv, b)});
  }
  return to_pairs(buchberger(out, arity));
}

}  // namespace pdvass::binomial
