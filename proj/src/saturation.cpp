#include "pdvass/saturation.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace pdvass::sat {

using model::OpKind;
using semilinear::SemilinearSet;

namespace {

void require_bidirected(const model::Pvas& p) {
  if (!p.is_bidirected()) throw PreconditionError("saturation requires a bidirected PVAS");
}

SaturationState make_state(std::size_t level, cong::CongruenceBasis basis, std::vector<ChainEntry> chain,
                           std::optional<cong::Pair> witness) {
  SaturationState s;
  s.level = level;
  s.relation = cong::cong_to_semilinear(basis);
  s.basis = std::move(basis);
  s.chain = std::move(chain);
  s.chain.push_back({level, s.basis.pairs().size(), s.relation.components().size(), std::move(witness)});
  return s;
}

}  // namespace

SaturationState initial_state(const model::Pvas& p) {
  require_bidirected(p);
  std::vector<cong::Pair> gens;
  for (const auto& t : p.transitions())
    if (t.op.is_internal()) gens.push_back({t.take, t.give});
  return make_state(0, cong::CongruenceBasis(p.dimension(), gens), {}, std::nullopt);
}

SaturationState step(const SaturationState& state, const model::Pvas& p) {
  const std::size_t d = p.dimension();
  std::set<cong::Pair> fresh;
  for (const auto& push : p.transitions()) {
    if (push.op.kind != OpKind::Push) continue;
    bool partnered = false;
    for (const auto& pop : p.transitions()) {
      if (pop.op.kind != OpKind::Pop || pop.op.symbol != push.op.symbol) continue;
      partnered = true;
      // {(x + u, y + v) : (x + u', y + v') in R}, push (u, u', a), pop (v', v, a).
      Vec lower = vec::concat(push.give, pop.take);
      Vec shift = vec::sub(vec::concat(push.take, pop.give), lower);
      SemilinearSet wrapped = semilinear::translate(semilinear::intersect_upset(state.relation, lower), shift);
      for (auto& pair : semilinear::to_congruence_basis(wrapped)) fresh.insert(std::move(pair));
    }
    if (!partnered) throw Error("push without a matching pop in a bidirected PVAS");
  }

  std::optional<cong::Pair> witness;
  for (const auto& [u, v] : fresh) {
    if (!state.basis.member(u, v)) {
      witness = cong::Pair{u, v};
      break;
    }
  }
  if (!witness) {
    SaturationState done = state;
    done.fixpoint = true;
    return done;
  }
  std::vector<cong::Pair> gens = state.basis.pairs();
  gens.insert(gens.end(), fresh.begin(), fresh.end());
  return make_state(state.level + 1, cong::CongruenceBasis(d, gens), state.chain, std::move(witness));
}

SaturationState saturate(const model::Pvas& p, const SaturationOptions& options) {
  SaturationState s = initial_state(p);
  for (;;) {
    SaturationState next = step(s, p);
    if (next.fixpoint) return next;
    if (next.level > options.maxLevel) {
      std::ostringstream log;
      write_chain(log, next.chain);
      throw CapExceeded("saturation did not stabilize within " + std::to_string(options.maxLevel) +
                        " levels\n" + log.str());
    }
    s = std::move(next);
  }
}

bool decide_reach(const model::Pvas& p, const Vec& s, const Vec& t, const SaturationOptions& options) {
  if (s.size() != p.dimension() || t.size() != p.dimension())
    throw PreconditionError("query vectors have the wrong dimension");
  if (s == t) return true;
  return saturate(p, options).basis.member(s, t);
}

MachineQuery encode_query(const model::Machine& m, model::StateId source, const Vec& s, model::StateId target,
                          const Vec& t) {
  if (s.size() != m.dimension() || t.size() != m.dimension())
    throw PreconditionError("query vectors have the wrong dimension");
  if (m.state_count() == 1) return {model::machine_as_pvas(m), s, t};
  auto enc = model::pvass_to_pvas(m, source, target);
  Vec src = enc.source, tgt = enc.target;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    src[i] += s[i];
    tgt[i] += t[i];
  }
  return {std::move(enc.pvas), std::move(src), std::move(tgt)};
}

void write_chain(std::ostream& out, const std::vector<ChainEntry>& chain) {
  out << "level\tgenerators\tcomponents\twitness\n";
  for (const auto& e : chain) {
    out << e.level << '\t' << e.generators << '\t' << e.components << '\t';
    if (e.witness)
      out << vec::to_string(e.witness->first) << ';' << vec::to_string(e.witness->second);
    else
      out << '-';
    out << '\n';
  }
}

}  // namespace pdvass::sat
