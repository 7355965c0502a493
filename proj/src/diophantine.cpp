#include "pdvass/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pdvass::dio {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw PreconditionError("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Vec Matrix::apply(const Vec& z) const {
  if (z.size() != cols_) throw PreconditionError("matrix/vector arity mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] = checked_add(r[i], checked_mul(at(i, j), z[j]));
  return r;
}

Int Matrix::column_norm() const {
  Int best = 0;
  for (std::size_t j = 0; j < cols_; ++j) best = std::max(best, vec::one_norm(column(j)));
  return best;
}

Int pottier_bound(const Matrix& a) {
  Int base = 1 + a.column_norm();
  Int r = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (r > std::numeric_limits<Int>::max() / base) return std::numeric_limits<Int>::max();
    r *= base;
  }
  return r;
}

std::vector<Vec> minimal_elements(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < vs.size() && !dominated; ++j)
      dominated = j != i && vec::leq(vs[j], vs[i]);
    if (!dominated) out.push_back(vs[i]);
  }
  return out;
}

namespace {

struct Candidate {
  Vec z;
  Vec image;  // A z
};

bool dominated_by_any(const Vec& z, const std::vector<Vec>& found) {
  for (const auto& f : found)
    if (vec::leq(f, z)) return true;
  return false;
}

// The completion loop. Candidates grow one unit at a time along columns j
// with <A z, A e_j> < 0; columns in [0, free_cols) may be incremented.
// Solutions (A z = 0) are appended to `found`; `prune` lists vectors whose
// upward closure can be discarded, and found solutions are added to it.
void complete(const Matrix& a, std::vector<Candidate> frontier, std::size_t free_cols,
              std::vector<Vec>& prune, std::vector<Vec>& found, bool stop_at_first) {
  std::vector<Vec> cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols[j] = a.column(j);
  while (!frontier.empty()) {
    std::vector<Candidate> open;
    for (auto& c : frontier) {
      if (vec::is_zero(c.image)) {
        found.push_back(c.z);
        prune.push_back(c.z);
        if (stop_at_first) return;
      } else {
        open.push_back(std::move(c));
      }
    }
    std::set<Vec> seen;
    std::vector<Candidate> next;
    for (const auto& c : open) {
      for (std::size_t j = 0; j < free_cols; ++j) {
        if (vec::dot(c.image, cols[j]) >= 0) continue;
        Vec z = c.z;
        ++z[j];
        if (seen.count(z) || dominated_by_any(z, prune)) continue;
        seen.insert(z);
        next.push_back({std::move(z), vec::add(c.image, cols[j])});
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

SolutionBasis hilbert_homogeneous(const Matrix& a) {
  std::vector<Candidate> seeds;
  for (std::size_t j = 0; j < a.cols(); ++j) seeds.push_back({vec::unit(a.cols(), j), a.column(j)});
  std::vector<Vec> prune, found;
  complete(a, std::move(seeds), a.cols(), prune, found, false);
  std::sort(found.begin(), found.end());
  const Int bound = pottier_bound(a);
  for (const auto& z : found)
    if (vec::max_norm(z) > bound)
      throw Error("minimal solution " + vec::to_string(z) + " exceeds the norm bound " + std::to_string(bound));
  return {std::move(found), {}};
}

SolutionBasis minimal_inhomogeneous(const Matrix& a, const Vec& b, const InhomogeneousOptions& options) {
  if (b.size() != a.rows()) throw PreconditionError("right-hand side has wrong length");
  SolutionBasis out;
  out.homogeneous = hilbert_homogeneous(a).minimals;
  if (vec::is_zero(b)) {
    out.minimals.push_back(vec::zeros(a.cols()));
    return out;
  }
  // Homogenize: [A | -b] (z, 1) = 0, never incrementing the last column.
  const std::size_t n = a.cols();
  Matrix h(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = a.at(i, j);
    h.at(i, n) = -b[i];
  }
  std::vector<Vec> prune;
  for (const auto& hz : out.homogeneous) {
    Vec p = hz;
    p.push_back(0);
    prune.push_back(std::move(p));
  }
  std::vector<Vec> found;
  complete(h, {{vec::unit(n + 1, n), h.column(n)}}, n, prune, found, options.stopAtFirst);
  for (auto& z : found) {
    z.pop_back();
    out.minimals.push_back(std::move(z));
  }
  std::sort(out.minimals.begin(), out.minimals.end());
  return out;
}

bool feasible(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw PreconditionError("right-hand side has wrong length");
  bool nonneg = true;
  for (std::size_t i = 0; i < a.rows() && nonneg; ++i)
    for (std::size_t j = 0; j < a.cols() && nonneg; ++j) nonneg = a.at(i, j) >= 0;
  if (!nonneg) return !minimal_inhomogeneous(a, b, {.stopAtFirst = true}).minimals.empty();
  // With A >= 0 a solution is a sequence of column subtractions keeping the
  // residual non-negative, so a search over residuals (at most the box below
  // b) decides it.
  if (!vec::is_nonneg(b)) return false;
  if (vec::is_zero(b)) return true;
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (Vec c = a.column(j); !vec::is_zero(c)) cols.push_back(std::move(c));
  std::set<Vec> seen{b};
  std::vector<Vec> todo{b};
  while (!todo.empty()) {
    Vec r = std::move(todo.back());
    todo.pop_back();
    for (const auto& c : cols) {
      if (!vec::leq(c, r)) continue;
      Vec next = vec::sub(r, c);
      if (vec::is_zero(next)) return true;
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return false;
}

SolutionBasis minimal_inequality(const Matrix& a, const Vec& b) {
  const std::size_t n = a.cols();
  Matrix s(a.rows(), n + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = a.at(i, j);
    s.at(i, n + i) = -1;
  }
  SolutionBasis full = minimal_inhomogeneous(s, b);
  SolutionBasis out;
  for (const auto& z : full.minimals) out.minimals.push_back(vec::slice(z, 0, n));
  out.minimals = minimal_elements(std::move(out.minimals));
  std::set<Vec> hom;
  for (const auto& z : full.homogeneous) {
    Vec p = vec::slice(z, 0, n);
    if (!vec::is_zero(p)) hom.insert(std::move(p));
  }
  out.homogeneous.assign(hom.begin(), hom.end());
  return out;
}

}  // namespace pdvass::dio
