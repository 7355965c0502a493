// Minimal solutions of linear Diophantine systems, against enumeration.

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pdvass/diophantine.hpp"

using namespace pdvass;
using dio::Matrix;

namespace {

bool dominated_by_some(const Vec& z, const std::vector<Vec>& basis) {
  return std::any_of(basis.begin(), basis.end(), [&](const Vec& b) { return vec::leq(b, z); });
}

bool antichain(const std::vector<Vec>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && vec::leq(vs[i], vs[j])) return false;
  return true;
}

/// z is a minimal plus a sum of homogeneous vectors.
bool decomposes(const Vec& z, const dio::SolutionBasis& s) {
  for (const Vec& m : s.minimals) {
    if (!vec::leq(m, z)) continue;
    if (oracle::in_monoid(s.homogeneous, vec::sub(z, m))) return true;
  }
  return false;
}

Matrix random_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng.range(-3, 3);
  return a;
}

std::vector<Vec> rows_of(const Matrix& a) {
  std::vector<Vec> out(a.rows(), Vec(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("homogeneous examples") {
  CHECK(dio::hilbert_homogeneous(Matrix::from_rows({{1, -1}})).minimals == std::vector<Vec>{{1, 1}});
  CHECK(dio::hilbert_homogeneous(Matrix::from_rows({{2, -3}})).minimals == std::vector<Vec>{{3, 2}});
  auto three = dio::hilbert_homogeneous(Matrix::from_rows({{1, 1, -1}})).minimals;
  CHECK(three == std::vector<Vec>{{0, 1, 1}, {1, 0, 1}});
  for (const Vec& z : oracle::dio_solutions({{1, 1, -1}}, 3, {0}, 4))
    if (!vec::is_zero(z)) CHECK(dominated_by_some(z, three));
  CHECK(dio::hilbert_homogeneous(Matrix::from_rows({{1, 1}})).minimals.empty());
}

TEST_CASE("inhomogeneous examples") {
  CHECK(dio::minimal_inhomogeneous(Matrix::from_rows({{1}}), {3}).minimals == std::vector<Vec>{{3}});
  CHECK(dio::minimal_inhomogeneous(Matrix::from_rows({{2}}), {3}).minimals.empty());
  auto two = dio::minimal_inhomogeneous(Matrix::from_rows({{1, 1}}), {2});
  CHECK(two.minimals == std::vector<Vec>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(two.homogeneous.empty());
  CHECK(oracle::dio_solutions({{1, 1}}, 2, {2}, 4).size() == 3);
  CHECK(dio::feasible(Matrix::from_rows({{2, 3}}), {7}));
  CHECK_FALSE(dio::feasible(Matrix::from_rows({{2, 4}}), {7}));
}

TEST_CASE("inequalities through slack columns") {
  auto s = dio::minimal_inequality(Matrix::from_rows({{1, -1}}), {1});
  CHECK(s.minimals == std::vector<Vec>{{1, 0}});
  CHECK(std::find(s.homogeneous.begin(), s.homogeneous.end(), Vec{1, 1}) != s.homogeneous.end());
}

TEST_CASE("Pottier bound") {
  Matrix a = Matrix::from_rows({{1, -2}, {0, 1}});
  CHECK(a.column_norm() == 3);
  CHECK(dio::pottier_bound(a) == 16);
}

TEST_CASE("random systems: complete, antichain, within the Pottier bound") {
  oracle::Rng rng(61);
  for (int i = 0; i < 120; ++i) {
    std::size_t rows = 1 + rng.below(3), cols = 1 + rng.below(4);
    Matrix a = random_matrix(rng, rows, cols);
    auto h = dio::hilbert_homogeneous(a);
    CHECK(antichain(h.minimals));
    Int bound = dio::pottier_bound(a);
    for (const Vec& z : h.minimals) {
      CHECK(vec::is_zero(a.apply(z)));
      CHECK(vec::max_norm(z) <= bound);
    }
    for (const Vec& z : oracle::dio_solutions(rows_of(a), cols, Vec(rows, 0), 6))
      if (!vec::is_zero(z)) CHECK(dominated_by_some(z, h.minimals));

    Vec b(rows);
    for (auto& x : b) x = rng.range(-3, 3);
    auto s = dio::minimal_inhomogeneous(a, b);
    CHECK(antichain(s.minimals));
    for (const Vec& z : s.minimals) CHECK(a.apply(z) == b);
    auto all = oracle::dio_solutions(rows_of(a), cols, b, 6);
    for (const Vec& z : all) CHECK(decomposes(z, s));
    CHECK(dio::feasible(a, b) == !s.minimals.empty());
    if (!all.empty()) CHECK(!s.minimals.empty());
  }
}

TEST_CASE("minimal elements") {
  CHECK(dio::minimal_elements({{2, 1}, {1, 1}, {1, 2}, {0, 3}, {1, 1}}) == std::vector<Vec>{{0, 3}, {1, 1}});
}

TEST_CASE("matrix construction") {
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {1}}), PreconditionError);
  Matrix c = Matrix::from_columns({{1, 2}, {3, 4}, {5, 6}}, 2);
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 3);
  CHECK(c.at(1, 2) == 6);
  CHECK(c.apply({1, 0, 1}) == Vec{6, 8});
}
