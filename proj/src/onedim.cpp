#include "pdvass/onedim.hpp"

#include <cstdlib>

namespace pdvass::onedim {

using graph::SummaryEngine;
using model::OpKind;

namespace {

void require_one_dim(const Machine& m, bool need_separated) {
  if (m.dimension() != 1) throw PreconditionError("expected a 1-dimensional machine");
  if (!m.is_bidirected()) throw PreconditionError("expected a bidirected machine");
  if (need_separated && !m.is_separated())
    throw PreconditionError("expected counter updates and stack operations on separate transitions");
}

SummaryTable extract(const LayerGraph& lg, std::size_t level) {
  const std::size_t n = lg.states;
  SummaryEngine engine(lg.graph);
  SummaryTable t;
  t.states = n;
  t.level = level;
  t.gamma.assign(n * n, SummaryValue::none());
  t.delta.assign(n, ExtInt::neg_inf());
  for (StateId p = 0; p < n; ++p) {
    auto row = engine.row(lg.base(p, 0));
    t.delta[p] = row.delta;
    for (StateId q = 0; q < n; ++q) t.at(p, q) = row.gamma[lg.base(q, 0)];
  }
  return t;
}

}  // namespace

LayerGraph build_layer_graph(const Machine& m, const SummaryTable* prev) {
  if (m.dimension() != 1) throw PreconditionError("layer graphs need a 1-dimensional machine");
  if (!m.is_separated())
    throw PreconditionError("expected counter updates and stack operations on separate transitions");
  const std::size_t n = m.state_count();
  LayerGraph lg;
  lg.states = n;
  lg.layers = m.alphabet().size() + 1;
  lg.graph = graph::WeightedGraph(2 * lg.layers * n + lg.layers * n * n);

  for (const auto& t : m.transitions())
    if (t.op.is_internal()) lg.graph.add_edge(lg.base(t.from, 0), lg.base(t.to, 0), t.effect[0]);
  if (!prev) return lg;

  for (std::size_t sigma = 0; sigma < lg.layers; ++sigma) {
    for (StateId p = 0; p < n; ++p) {
      ExtInt c = prev->delta[p];
      if (c.is_finite()) {
        lg.graph.add_edge(lg.base(p, sigma), lg.delta_gadget(p, sigma), c.value());
        lg.graph.add_edge(lg.delta_gadget(p, sigma), lg.base(p, sigma), -c.value() + 1);
      }
      for (StateId q = 0; q < n; ++q) {
        const SummaryValue& v = prev->at(p, q);
        if (!v.a.is_finite()) continue;
        Int a = v.a.value();
        Int b = v.b.is_omega() ? 0 : v.b.value();
        lg.graph.add_edge(lg.base(p, sigma), lg.gamma_gadget(p, q, sigma), a);
        lg.graph.add_edge(lg.gamma_gadget(p, q, sigma), lg.base(q, sigma), -a + b);
      }
    }
  }
  for (const auto& t : m.transitions()) {
    if (t.op.kind == OpKind::Push)
      lg.graph.add_edge(lg.base(t.from, 0), lg.base(t.to, t.op.symbol + 1), 0);
    else if (t.op.kind == OpKind::Pop)
      lg.graph.add_edge(lg.base(t.from, t.op.symbol + 1), lg.base(t.to, 0), 0);
  }
  return lg;
}

Saturation saturate_summaries(const Machine& m, const SaturateOptions& options) {
  require_one_dim(m, true);
  Saturation s;
  s.history.push_back(extract(build_layer_graph(m, nullptr), 0));
  for (std::size_t k = 1;; ++k) {
    if (k > options.maxLevel)
      throw CapExceeded("summary saturation did not converge within " + std::to_string(options.maxLevel) +
                        " levels");
    s.history.push_back(extract(build_layer_graph(m, &s.history.back()), k));
    if (s.history.back().same_values(s.history[k - 1])) break;
  }
  return s;
}

Coset Coset::of(Int r, Int g) {
  if (g < 0) g = -g;
  return {false, g == 0 ? r : floor_mod(r, g), g};
}

bool Coset::contains(Int x) const {
  if (empty) return false;
  if (modulus == 0) return x == offset;
  return floor_mod(x, modulus) == offset;
}

std::string Coset::to_string() const {
  if (empty) return "EMPTY";
  if (modulus == 0) return std::to_string(offset);
  return std::to_string(offset) + "+" + std::to_string(modulus) + "Z";
}

Coset coset_join(const Coset& a, const Coset& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  Int g = gcd(gcd(a.modulus, b.modulus), std::llabs(a.offset - b.offset));
  return Coset::of(a.offset, g);
}

Coset coset_add(const Coset& a, const Coset& b) {
  if (a.empty || b.empty) return Coset::none();
  return Coset::of(checked_add(a.offset, b.offset), gcd(a.modulus, b.modulus));
}

std::vector<Coset> zreach_cosets(const Machine& m) {
  require_one_dim(m, false);
  const std::size_t n = m.state_count();
  std::vector<Coset> w(n * n);
  auto join_into = [&](std::size_t p, std::size_t q, const Coset& c) {
    Coset j = coset_join(w[p * n + q], c);
    if (j == w[p * n + q]) return false;
    w[p * n + q] = j;
    return true;
  };
  for (std::size_t p = 0; p < n; ++p) join_into(p, p, Coset::single(0));
  for (const auto& t : m.transitions())
    if (t.op.is_internal()) join_into(t.from, t.to, Coset::single(t.effect[0]));

  std::vector<std::pair<const model::Transition*, const model::Transition*>> wraps;
  for (const auto& push : m.transitions()) {
    if (push.op.kind != OpKind::Push) continue;
    for (const auto& pop : m.transitions())
      if (pop.op.kind == OpKind::Pop && pop.op.symbol == push.op.symbol) wraps.push_back({&push, &pop});
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (auto [push, pop] : wraps) {
      const Coset& inner = w[push->to * n + pop->from];
      if (inner.empty) continue;
      Coset c = coset_add(Coset::single(push->effect[0] + pop->effect[0]), inner);
      changed |= join_into(push->from, pop->to, c);
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = 0; r < n; ++r) {
        if (w[p * n + r].empty) continue;
        for (std::size_t q = 0; q < n; ++q)
          if (!w[r * n + q].empty) changed |= join_into(p, q, coset_add(w[p * n + r], w[r * n + q]));
      }
  }
  return w;
}

OneDim::OneDim(const Machine& m, const SaturateOptions& options)
    : states_(m.state_count()), saturation_(saturate_summaries(m, options)), cosets_(zreach_cosets(m)) {}

bool OneDim::cover(StateId p, StateId q) const {
  const auto& a = saturation_.table().at(p, q).a;
  return a.is_finite() && a.value() == 0;
}

std::optional<std::size_t> OneDim::first_cover_level(StateId p, StateId q) const {
  for (const auto& t : saturation_.history) {
    const auto& a = t.at(p, q).a;
    if (a.is_finite() && a.value() == 0) return t.level;
  }
  return std::nullopt;
}

bool cover(const Machine& m, StateId p, StateId q) { return OneDim(m).cover(p, q); }

bool zreach(const Machine& m, StateId p, StateId q) {
  const std::size_t n = m.state_count();
  return zreach_cosets(m)[p * n + q].contains(0);
}

bool reach1d(const Machine& m, StateId p, StateId q) { return OneDim(m).reach(p, q); }

void write_trace(std::ostream& out, const Machine& m, const Saturation& s) {
  out << "level\tp\tq\ta\tb\n";
  const auto& names = m.states();
  for (const auto& t : s.history) {
    for (StateId p = 0; p < t.states; ++p) {
      for (StateId q = 0; q < t.states; ++q) {
        const auto& v = t.at(p, q);
        out << t.level << '\t' << names[p] << '\t' << names[q] << '\t' << v.a.to_string() << '\t'
            << v.b.to_string() << '\n';
      }
      out << t.level << '\t' << names[p] << "\t*\t" << t.delta[p].to_string() << "\t-\n";
    }
  }
}

}  // namespace pdvass::onedim
