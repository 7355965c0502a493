// Linear and semilinear sets: membership and the relational operations,
// checked pointwise against coefficient enumeration.

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pdvass/semilinear.hpp"

using namespace pdvass;
using semilinear::LinearSet;
using semilinear::SemilinearSet;

namespace {

SemilinearSet one(std::size_t arity, Vec base, std::vector<Vec> periods) {
  return SemilinearSet(arity, {LinearSet{std::move(base), std::move(periods)}});
}

/// Pointwise equality on every vector of max-norm <= k.
bool same_on_box(const SemilinearSet& a, const SemilinearSet& b, Int k) {
  for (const Vec& v : oracle::box(a.arity(), k))
    if (a.member(v) != b.member(v)) return false;
  return true;
}

/// Successor relation {(x, x + step) : x >= 0} on N^1.
SemilinearSet successor(Int step) { return one(2, {0, step}, {{1, 1}}); }

LinearSet random_linear(oracle::Rng& rng, std::size_t k) {
  LinearSet l;
  for (std::size_t i = 0; i < k; ++i) l.base.push_back(rng.range(0, 3));
  std::size_t np = rng.below(3);
  for (std::size_t j = 0; j < np; ++j) {
    Vec p(k);
    for (auto& x : p) x = rng.range(0, 3);
    l.periods.push_back(p);
  }
  l.canonicalize();
  return l;
}

SemilinearSet random_relation(oracle::Rng& rng) {
  SemilinearSet s(2);
  std::size_t n = 1 + rng.below(2);
  for (std::size_t i = 0; i < n; ++i) s.add(random_linear(rng, 2));
  return s;
}

}  // namespace

TEST_CASE("linear set membership") {
  LinearSet l{{1, 1}, {{1, 0}, {0, 2}}};
  CHECK(l.member({1, 1}));
  CHECK(l.member({3, 5}));
  CHECK(oracle::linear_member_enum(l.base, l.periods, {3, 5}, 6));
  CHECK_FALSE(l.member({3, 4}));
  LinearSet even{{0}, {{2}}};
  CHECK_FALSE(even.member({7}));
  CHECK_THROWS_AS(even.member({1, 1}), PreconditionError);
}

TEST_CASE("membership agrees with coefficient enumeration") {
  oracle::Rng rng(71);
  for (int i = 0; i < 150; ++i) {
    std::size_t k = 1 + rng.below(4);
    LinearSet l = random_linear(rng, k);
    for (const Vec& lambda : oracle::box(l.periods.size(), 4)) {
      Vec v = l.base;
      for (std::size_t j = 0; j < l.periods.size(); ++j) vec::add_into(v, l.periods[j], lambda[j]);
      CHECK(l.member(v));
    }
    // Random points: member iff some small combination hits them.
    for (int t = 0; t < 10; ++t) {
      Vec v(k);
      for (auto& x : v) x = rng.range(0, 8);
      bool enumerated = oracle::linear_member_enum(l.base, l.periods, v, 8);
      CHECK(l.member(v) == enumerated);
    }
  }
}

TEST_CASE("upset intersection") {
  SemilinearSet even = one(1, {0}, {{2}});
  auto above = semilinear::intersect_upset(even, {3});
  CHECK(same_on_box(above, one(1, {4}, {{2}}), 12));
  CHECK(same_on_box(semilinear::intersect_upset(even, {0}), even, 12));
  CHECK(semilinear::intersect_upset(one(1, {1}, {}), {2}).is_empty());
}

TEST_CASE("upset intersection keeps exactly the points above the floor") {
  oracle::Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    SemilinearSet s = random_relation(rng);
    Vec c{rng.range(0, 4), rng.range(0, 4)};
    auto up = semilinear::intersect_upset(s, c);
    for (const Vec& v : oracle::box(2, 10)) CHECK(up.member(v) == (s.member(v) && vec::leq(c, v)));
  }
}

TEST_CASE("translation") {
  SemilinearSet s = one(1, {4}, {{2}});
  CHECK(semilinear::translate(s, {0}) == s);
  CHECK(same_on_box(semilinear::translate(s, {-3}), one(1, {1}, {{2}}), 12));
  CHECK_THROWS_AS(semilinear::translate(one(1, {0}, {{1}}), {-1}), PreconditionError);
}

TEST_CASE("composition") {
  auto diag = SemilinearSet::diagonal(1);
  auto s = one(2, {1, 0}, {{1, 2}});
  CHECK(same_on_box(semilinear::compose(diag, s), s, 6));
  CHECK(same_on_box(semilinear::compose(s, diag), s, 6));
  CHECK(same_on_box(semilinear::compose(successor(1), successor(1)), successor(2), 10));
  auto odd = one(2, {0, 1}, {{0, 2}});
  auto even = one(2, {0, 0}, {{2, 0}});
  CHECK(semilinear::compose(odd, even).is_empty());
}

TEST_CASE("composition is associative on small relations") {
  oracle::Rng rng(73);
  for (int i = 0; i < 40; ++i) {
    auto a = random_relation(rng), b = random_relation(rng), c = random_relation(rng);
    auto left = semilinear::compose(semilinear::compose(a, b), c);
    auto right = semilinear::compose(a, semilinear::compose(b, c));
    CHECK(same_on_box(left, right, 6));
  }
}

TEST_CASE("composition matches the pointwise definition") {
  oracle::Rng rng(74);
  for (int i = 0; i < 40; ++i) {
    auto a = random_relation(rng), b = random_relation(rng);
    auto ab = semilinear::compose(a, b);
    for (const Vec& v : oracle::box(2, 6)) {
      bool want = false;
      for (Int y = 0; y <= 40 && !want; ++y) want = a.member(Vec{v[0], y}) && b.member(Vec{y, v[1]});
      CHECK(ab.member(v) == want);
    }
  }
}

TEST_CASE("composition modulo a lattice above a floor") {
  // (x, y) with y >= 1, then y' = y + 2k, then (y', z) in the successor.
  auto r = semilinear::compose_modulo(SemilinearSet::diagonal(1), successor(1), {1}, {{2}});
  for (const Vec& v : oracle::box(2, 8)) {
    bool want = v[0] >= 1 && v[1] >= 2 && (v[1] - 1 - v[0]) % 2 == 0;
    CHECK(r.member(v) == want);
  }
}

TEST_CASE("congruence generators of a semilinear relation") {
  auto pairs = semilinear::to_congruence_basis(one(2, {1, 1}, {{1, 0}}));
  CHECK(std::set<semilinear::Pair>(pairs.begin(), pairs.end()) == std::set<semilinear::Pair>{{{1}, {1}}, {{2}, {1}}});
  CHECK(semilinear::to_congruence_basis(SemilinearSet::singleton({2, 3})).size() == 1);

  oracle::Rng rng(75);
  for (int i = 0; i < 40; ++i) {
    auto s = random_relation(rng);
    auto gens = semilinear::to_congruence_basis(s);
    oracle::RewriteClosure closure(gens, 1, 60);
    for (const Vec& v : oracle::box(2, 6))
      if (s.member(v)) CHECK(closure.related({v[0]}, {v[1]}));
  }
}

TEST_CASE("union, simplification and inclusion") {
  auto a = one(1, {0}, {{2}});
  auto b = one(1, {1}, {{2}});
  auto u = a.united(b);
  CHECK(same_on_box(u, one(1, {0}, {{1}}), 10));
  auto redundant = one(1, {0}, {{1}, {2}}).united(one(1, {3}, {{1}}));
  auto simple = redundant.simplified();
  CHECK(simple.components().size() == 1);
  CHECK(simple.size() < redundant.size());
  CHECK(same_on_box(simple, redundant, 10));
  CHECK(semilinear::included(one(1, {4}, {{2}}), a));
  CHECK_FALSE(semilinear::included(a, one(1, {4}, {{2}})));
}

TEST_CASE("text form round-trips") {
  auto s = one(2, {1, 0}, {{0, 1}, {2, 2}}).united(SemilinearSet::singleton({3, 3}));
  auto text = semilinear::to_text(s);
  CHECK(semilinear::parse_text(text, 2) == s);
  CHECK(semilinear::parse_text("", 2).is_empty());
}
