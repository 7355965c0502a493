#include "pdvass/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pdvass/diophantine.hpp"

namespace pdvass::cong {

using semilinear::LinearSet;
using semilinear::SemilinearSet;

CongruenceBasis::CongruenceBasis(std::size_t dimension, const std::vector<Pair>& pairs) : dimension_(dimension) {
  std::set<Pair> sym;
  for (const auto& [u, v] : pairs) {
    if (u.size() != dimension || v.size() != dimension) throw PreconditionError("congruence pair has wrong dimension");
    if (!vec::is_nonneg(u) || !vec::is_nonneg(v)) throw PreconditionError("congruence pair must be non-negative");
    if (u == v) continue;
    sym.insert({u, v});
    sym.insert({v, u});
  }
  pairs_.assign(sym.begin(), sym.end());
  groebner_ = std::make_shared<const binomial::GroebnerBasis>(binomial::buchberger(pairs_, dimension_));
}

bool CongruenceBasis::member(const Vec& s, const Vec& t) const {
  if (s.size() != dimension_ || t.size() != dimension_) throw PreconditionError("membership dimension mismatch");
  if (s == t) return true;
  return groebner_->reduces_to_zero(s, t);
}

namespace {

// Row echelon form over Z of the given vectors, nonzero rows only.
std::vector<Vec> lattice_basis(std::vector<Vec> rows, std::size_t d) {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < d; ++c) {
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (pivot == rows.size() || std::abs(rows[i][c]) < std::abs(rows[pivot][c]))) pivot = i;
      if (pivot == rows.size()) break;
      bool others = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i][c] == 0) continue;
        vec::add_into(rows[i], rows[pivot], -(rows[i][c] / rows[pivot][c]));
        others = true;
      }
      if (!others) {
        out.push_back(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
    }
  }
  return out;
}

bool upset_is_free(const CongruenceBasis& r, const std::vector<Pair>& m, const Vec& b) {
  for (const auto& [s, t] : m)
    if (!r.member(vec::add(b, s), vec::add(b, t))) return false;
  return true;
}

}  // namespace

BigVector big_vector(const CongruenceBasis& r) {
  const std::size_t d = r.dimension();
  BigVector out;
  out.V = r.pairs();
  for (std::size_t i = 0; i < d; ++i) out.V.push_back({vec::unit(d, i), vec::unit(d, i)});

  out.columnNorm = 0;
  for (const auto& [u, v] : out.V) out.columnNorm = std::max(out.columnNorm, vec::one_norm(u) + vec::one_norm(v));
  out.lambda = 1;
  for (std::size_t i = 0; i < 2 * d; ++i) out.lambda = checked_mul(out.lambda, 1 + out.columnNorm);

  // <V> intersected with N^{2d} is {(s, t) >= 0 : s - t in L}, L spanned by
  // the differences u - v. Unknowns: s, t and both signs of L coefficients.
  std::vector<Vec> diffs;
  for (const auto& [u, v] : r.pairs()) diffs.push_back(vec::sub(u, v));
  auto basis = lattice_basis(diffs, d);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(vec::unit(d, i));
  for (std::size_t i = 0; i < d; ++i) cols.push_back(vec::scale(vec::unit(d, i), -1));
  for (const auto& w : basis) {
    cols.push_back(vec::scale(w, -1));
    cols.push_back(w);
  }
  dio::Matrix a = dio::Matrix::from_columns(cols, d);
  std::vector<Vec> ys;
  for (const auto& h : dio::hilbert_homogeneous(a).minimals) {
    Vec y = vec::slice(h, 0, 2 * d);
    if (!vec::is_zero(y)) ys.push_back(std::move(y));
  }
  for (const auto& y : dio::minimal_elements(ys)) {
    out.M.push_back({vec::slice(y, 0, d), vec::slice(y, d, d)});
    out.withinNormBound = out.withinNormBound && vec::max_norm(y) <= out.lambda;
  }

  Vec sum = vec::zeros(2 * d);
  for (const auto& [u, v] : out.V) vec::add_into(sum, vec::concat(u, v));
  out.boundB = vec::slice(vec::scale(sum, out.lambda), 0, d);

  // Smallest t with t*(1,..,1) free, by doubling, then shrink each coordinate.
  const Int cap = d == 0 ? 0 : *std::max_element(out.boundB.begin(), out.boundB.end());
  Vec b;
  for (Int t = 0;; t = t == 0 ? 1 : 2 * t) {
    if (t >= cap) {
      b = out.boundB;
      break;
    }
    b.assign(d, t);
    if (upset_is_free(r, out.M, b)) break;
  }
  if (!upset_is_free(r, out.M, b)) throw Error("congruence is not free above the bound vector");
  for (std::size_t i = 0; i < d; ++i) {
    Int lo = 0, hi = b[i];
    while (lo < hi) {
      Int mid = lo + (hi - lo) / 2;
      Vec c = b;
      c[i] = mid;
      if (upset_is_free(r, out.M, c))
        hi = mid;
      else
        lo = mid + 1;
    }
    b[i] = lo;
  }
  out.b = std::move(b);
  return out;
}

std::vector<Region> complement_regions(const Vec& b) {
  std::vector<Region> out;
  Vec base = vec::zeros(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<std::size_t> axes;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (k != i) axes.push_back(k);
    for (Int k = 0; k < b[i]; ++k) {
      out.push_back({base, axes});
      ++base[i];
    }
  }
  return out;
}

CongruenceBasis restrict_region(const CongruenceBasis& r, const Region& l) {
  const std::size_t d = r.dimension();
  if (l.base.size() != d) throw PreconditionError("region base has wrong dimension");
  auto shifted = binomial::quotient_by_monomial(r.pairs(), d, l.base);
  auto kept = binomial::eliminate(shifted, d, l.axes);
  std::vector<Pair> projected;
  for (const auto& [u, v] : kept) {
    Vec pu, pv;
    for (std::size_t k : l.axes) {
      pu.push_back(u[k]);
      pv.push_back(v[k]);
    }
    projected.push_back({pu, pv});
  }
  return CongruenceBasis(l.axes.size(), projected);
}

namespace {

Vec embed(const Vec& v, std::size_t d, std::size_t missing) {
  Vec out;
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t k = 0, j = 0; k < d; ++k) out.push_back(k == missing ? 0 : v[half * (d - 1) + j++]);
  return out;
}

using Cache = std::map<std::pair<std::size_t, std::vector<Pair>>, SemilinearSet>;

SemilinearSet convert(const CongruenceBasis& r, Cache& cache, ConversionStats* stats) {
  const std::size_t d = r.dimension();
  auto key = std::make_pair(d, r.pairs());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (d == 0) return cache[key] = SemilinearSet(0, {LinearSet{{}, {}}});

  BigVector bv = big_vector(r);
  SemilinearSet t = SemilinearSet::diagonal(d);

  auto regions = complement_regions(bv.b);
  if (stats) stats->regions += regions.size();
  for (const auto& l : regions) {
    std::size_t missing = 0;
    while (std::find(l.axes.begin(), l.axes.end(), missing) != l.axes.end()) ++missing;
    // Single steps (u + c, v + c) whose source or target lies in l.
    for (const auto& [u, v] : r.pairs()) {
      for (const Vec* end : {&u, &v}) {
        Vec c(d, 0);
        if ((*end)[missing] > l.base[missing]) continue;
        for (std::size_t k = 0; k < d; ++k) c[k] = std::max<Int>(l.base[k] - (*end)[k], 0);
        c[missing] = l.base[missing] - (*end)[missing];
        LinearSet step{vec::concat(vec::add(u, c), vec::add(v, c)), {}};
        for (std::size_t k : l.axes) step.periods.push_back(vec::concat(vec::unit(d, k), vec::unit(d, k)));
        t.add(std::move(step));
      }
    }
    SemilinearSet inner = convert(restrict_region(r, l), cache, stats);
    Vec shift = vec::concat(l.base, l.base);
    for (const auto& c : inner.components()) {
      LinearSet e{vec::add(embed(c.base, d, missing), shift), {}};
      for (const auto& p : c.periods) e.periods.push_back(embed(p, d, missing));
      t.add(std::move(e));
    }
  }
  t = t.simplified();

  // A rewriting chain, shortcut inside each region, visits each of the n
  // lower regions at most once. Before its first visit to b-up every step
  // starts below b, after the last one every step ends below b, so 2n + 1
  // compositions of t suffice on either side. t is reflexive, hence squaring.
  const std::size_t needed = 2 * regions.size() + 1;
  for (std::size_t power = 1; power < needed; power *= 2) {
    SemilinearSet sq = semilinear::compose(t, t).simplified();
    if (stats) ++stats->squarings;
    if (semilinear::included(sq, t)) {
      if (stats) stats->closedEarly = true;
      break;
    }
    t = t.united(sq).simplified();
  }

  // The first and last visit to b-up are joined by (b, b) + M*, which is
  // {(x, z) >= (b, b) : x - z in L}.
  std::vector<Vec> diffs;
  for (const auto& [u, v] : r.pairs()) diffs.push_back(vec::sub(u, v));
  t = t.united(semilinear::compose_modulo(t, t, bv.b, lattice_basis(diffs, d))).simplified();
  return cache[key] = t;
}

}  // namespace

SemilinearSet cong_to_semilinear(const CongruenceBasis& r, ConversionStats* stats) {
  Cache cache;
  return convert(r, cache, stats);
}

}  // namespace pdvass::cong
