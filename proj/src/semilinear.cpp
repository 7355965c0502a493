#include "pdvass/semilinear.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pdvass/diophantine.hpp"

namespace pdvass::semilinear {

namespace {

dio::Matrix columns(const std::vector<Vec>& cols, std::size_t rows) { return dio::Matrix::from_columns(cols, rows); }

// v in periods* ?
bool generated(const Vec& v, const std::vector<Vec>& periods) {
  if (vec::is_zero(v)) return true;
  if (!vec::is_nonneg(v)) return false;
  if (periods.empty()) return false;
  return dio::feasible(columns(periods, v.size()), v);
}

// a is inside b when a's base is in b and a's periods are in b's monoid.
bool inside(const LinearSet& a, const LinearSet& b) {
  if (!b.member(a.base)) return false;
  return std::all_of(a.periods.begin(), a.periods.end(), [&](const Vec& p) { return generated(p, b.periods); });
}

}  // namespace

void LinearSet::canonicalize() {
  std::erase_if(periods, [](const Vec& p) { return vec::is_zero(p); });
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
}

bool LinearSet::member(const Vec& v) const {
  if (v.size() != base.size()) throw PreconditionError("membership arity mismatch");
  return generated(vec::sub(v, base), periods);
}

SemilinearSet::SemilinearSet(std::size_t arity, std::vector<LinearSet> components) : arity_(arity) {
  for (auto& c : components) add(std::move(c));
}

SemilinearSet SemilinearSet::singleton(const Vec& v) { return SemilinearSet(v.size(), {LinearSet{v, {}}}); }

SemilinearSet SemilinearSet::diagonal(std::size_t d) {
  LinearSet l{vec::zeros(2 * d), {}};
  for (std::size_t i = 0; i < d; ++i) {
    Vec p = vec::zeros(2 * d);
    p[i] = p[d + i] = 1;
    l.periods.push_back(p);
  }
  return SemilinearSet(2 * d, {l});
}

void SemilinearSet::add(LinearSet l) {
  if (l.base.size() != arity_) throw PreconditionError("linear set arity mismatch");
  for (const auto& p : l.periods)
    if (p.size() != arity_) throw PreconditionError("period arity mismatch");
  l.canonicalize();
  auto pos = std::lower_bound(components_.begin(), components_.end(), l);
  if (pos != components_.end() && *pos == l) return;
  components_.insert(pos, std::move(l));
}

SemilinearSet SemilinearSet::united(const SemilinearSet& o) const {
  if (o.arity_ != arity_) throw PreconditionError("union arity mismatch");
  SemilinearSet r = *this;
  for (const auto& c : o.components_) r.add(c);
  return r;
}

bool SemilinearSet::member(const Vec& v) const {
  if (v.size() != arity_) throw PreconditionError("membership arity mismatch");
  for (const auto& c : components_)
    if (c.member(v)) return true;
  return false;
}

bool SemilinearSet::member(const Vec& s, const Vec& t) const { return member(vec::concat(s, t)); }

std::size_t SemilinearSet::size() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += 1 + c.periods.size();
  return n;
}

SemilinearSet SemilinearSet::simplified() const {
  std::vector<LinearSet> reduced;
  for (auto c : components_) {
    // Drop periods generated by the remaining ones, largest first.
    for (std::size_t i = c.periods.size(); i-- > 0;) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < c.periods.size(); ++j)
        if (j != i) others.push_back(c.periods[j]);
      if (generated(c.periods[i], others)) c.periods = std::move(others);
    }
    reduced.push_back(std::move(c));
  }
  std::vector<bool> dropped(reduced.size(), false);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = 0; j < reduced.size() && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      dropped[i] = inside(reduced[i], reduced[j]);
    }
  }
  SemilinearSet out(arity_);
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (!dropped[i]) out.add(reduced[i]);
  return out;
}

bool included(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.arity() != b.arity()) throw PreconditionError("inclusion arity mismatch");
  return std::all_of(a.components().begin(), a.components().end(), [&](const LinearSet& l) {
    return std::any_of(b.components().begin(), b.components().end(), [&](const LinearSet& m) { return inside(l, m); });
  });
}

SemilinearSet intersect_upset(const SemilinearSet& s, const Vec& c) {
  if (c.size() != s.arity()) throw PreconditionError("upset arity mismatch");
  SemilinearSet out(s.arity());
  for (const auto& l : s.components()) {
    Vec need(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) need[i] = std::max<Int>(c[i] - l.base[i], 0);
    if (vec::is_zero(need)) {
      out.add(l);
      continue;
    }
    if (l.periods.empty()) continue;
    auto sol = dio::minimal_inequality(columns(l.periods, c.size()), need);
    for (const auto& lambda : sol.minimals) {
      Vec base = l.base;
      for (std::size_t j = 0; j < lambda.size(); ++j) vec::add_into(base, l.periods[j], lambda[j]);
      out.add({std::move(base), l.periods});
    }
  }
  return out;
}

SemilinearSet translate(const SemilinearSet& s, const Vec& delta, bool guard_non_negative) {
  if (delta.size() != s.arity()) throw PreconditionError("translation arity mismatch");
  SemilinearSet out(s.arity());
  for (const auto& l : s.components()) {
    Vec base = vec::add(l.base, delta);
    if (guard_non_negative && !vec::is_nonneg(base))
      throw PreconditionError("translation leaves N^k: base " + vec::to_string(base));
    out.add({std::move(base), l.periods});
  }
  return out;
}

SemilinearSet compose(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.arity() % 2 != 0) throw PreconditionError("compose needs relations of equal arity");
  return compose_modulo(a, b, vec::zeros(a.arity() / 2), {});
}

SemilinearSet compose_modulo(const SemilinearSet& a, const SemilinearSet& b, const Vec& floor,
                             const std::vector<Vec>& lattice) {
  if (a.arity() != b.arity() || a.arity() % 2 != 0) throw PreconditionError("compose needs relations of equal arity");
  const std::size_t d = a.arity() / 2;
  if (floor.size() != d) throw PreconditionError("compose floor has wrong arity");
  for (const auto& w : lattice)
    if (w.size() != d) throw PreconditionError("lattice vector has wrong arity");
  const SemilinearSet left = vec::is_zero(floor) ? a : intersect_upset(a, vec::concat(vec::zeros(d), floor));
  const SemilinearSet right = vec::is_zero(floor) ? b : intersect_upset(b, vec::concat(floor, vec::zeros(d)));

  SemilinearSet out(a.arity());
  for (const auto& l1 : left.components()) {
    for (const auto& l2 : right.components()) {
      // Periods that do not touch the middle coordinates pass straight through.
      std::vector<Vec> free_periods, p1, p2;
      for (const auto& p : l1.periods) (vec::is_zero(vec::slice(p, d, d)) ? free_periods : p1).push_back(p);
      for (const auto& p : l2.periods) (vec::is_zero(vec::slice(p, 0, d)) ? free_periods : p2).push_back(p);
      // Middle: b1_y + P1_y lambda - b2_y - P2_y mu = W (k+ - k-).
      std::vector<Vec> cols;
      for (const auto& p : p1) cols.push_back(vec::slice(p, d, d));
      for (const auto& p : p2) cols.push_back(vec::scale(vec::slice(p, 0, d), -1));
      for (const auto& w : lattice) {
        cols.push_back(vec::scale(w, -1));
        cols.push_back(w);
      }
      Vec rhs = vec::sub(vec::slice(l2.base, 0, d), vec::slice(l1.base, d, d));
      if (cols.empty()) {
        if (!vec::is_zero(rhs)) continue;
        out.add({vec::concat(vec::slice(l1.base, 0, d), vec::slice(l2.base, d, d)), free_periods});
        continue;
      }
      auto sol = dio::minimal_inhomogeneous(columns(cols, d), rhs);
      if (sol.minimals.empty()) continue;
      const std::size_t n1 = p1.size(), n2 = p2.size();
      auto outer = [&](const Vec& coeff, bool with_bases) {
        Vec x = with_bases ? vec::slice(l1.base, 0, d) : vec::zeros(d);
        Vec z = with_bases ? vec::slice(l2.base, d, d) : vec::zeros(d);
        for (std::size_t j = 0; j < n1; ++j) vec::add_into(x, vec::slice(p1[j], 0, d), coeff[j]);
        for (std::size_t j = 0; j < n2; ++j) vec::add_into(z, vec::slice(p2[j], d, d), coeff[n1 + j]);
        return vec::concat(x, z);
      };
      std::vector<Vec> periods = free_periods;
      for (const auto& h : sol.homogeneous) periods.push_back(outer(h, false));
      for (const auto& m : sol.minimals) out.add({outer(m, true), periods});
    }
  }
  return out;
}

std::vector<Pair> to_congruence_basis(const SemilinearSet& s) {
  if (s.arity() % 2 != 0) throw PreconditionError("relation arity must be even");
  const std::size_t d = s.arity() / 2;
  std::set<Pair> pairs;
  auto split = [&](const Vec& v) { return Pair{vec::slice(v, 0, d), vec::slice(v, d, d)}; };
  for (const auto& l : s.components()) {
    pairs.insert(split(l.base));
    for (const auto& p : l.periods) pairs.insert(split(vec::add(l.base, p)));
  }
  return {pairs.begin(), pairs.end()};
}

std::string to_text(const SemilinearSet& s) {
  std::ostringstream out;
  for (const auto& l : s.components()) {
    out << vec::to_string(l.base) << " |";
    for (std::size_t i = 0; i < l.periods.size(); ++i) out << (i ? " ; " : " ") << vec::to_string(l.periods[i]);
    out << '\n';
  }
  return out.str();
}

SemilinearSet parse_text(const std::string& text, std::size_t arity) {
  SemilinearSet out(arity);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError("expected 'base | periods'", line_no, 1);
    try {
      LinearSet l{vec::parse(line.substr(0, bar)), {}};
      std::stringstream rest(line.substr(bar + 1));
      std::string item;
      while (std::getline(rest, item, ';'))
        if (item.find_first_not_of(" \t\r") != std::string::npos) l.periods.push_back(vec::parse(item));
      out.add(std::move(l));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  return out;
}

}  // namespace pdvass::semilinear
