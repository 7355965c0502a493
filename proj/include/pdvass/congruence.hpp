#pragma once

// Congruences on N^d given by finite bases, and their conversion to
// semilinear relations over N^{2d}.

#include <memory>
#include <utility>
#include <vector>

#include "pdvass/binomial.hpp"
#include "pdvass/semilinear.hpp"

namespace pdvass::cong {

using Pair = std::pair<Vec, Vec>;

/// A finite basis R of the congruence Cong(R). Stored symmetrized, without
/// reflexive pairs. The Groebner basis for membership is computed once.
class CongruenceBasis {
 public:
  explicit CongruenceBasis(std::size_t dimension, const std::vector<Pair>& pairs = {});

  std::size_t dimension() const { return dimension_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool member(const Vec& s, const Vec& t) const;
  const binomial::GroebnerBasis& groebner() const { return *groebner_; }

 private:
  std::size_t dimension_;
  std::vector<Pair> pairs_;
  std::shared_ptr<const binomial::GroebnerBasis> groebner_;
};

struct BigVector {
  std::vector<Pair> V;     // symmetrized R plus the diagonal units
  std::vector<Pair> M;     // minimal nonzero elements of <V> within N^{2d}
  Int columnNorm = 0;      // largest 1-norm of a column of A
  Int lambda = 0;          // (1 + columnNorm)^{2d}
  Vec boundB;              // first half of lambda * sum(V)
  Vec b;                   // least vector with Q_{b up} = M*, found by search
  bool withinNormBound = true;  // every Hilbert-basis vector respects lambda
};

/// Computes V, M and both vectors b. `b` is a minimal element of the
/// upward-closed set {b : b + m_s ~ b + m_t for all m in M}, which is at
/// most `boundB`.
BigVector big_vector(const CongruenceBasis& r);

struct Region {
  Vec base;
  std::vector<std::size_t> axes;  // sorted coordinate indices
};

/// The regions L_1..L_n covering N^d minus b-up, in the order that repeats
/// coordinate 1 b(1) times, then coordinate 2, and so on. Each has exactly
/// one missing axis.
std::vector<Region> complement_regions(const Vec& b);

/// A basis of Q_L written over the |axes| coordinates of the region.
CongruenceBasis restrict_region(const CongruenceBasis& r, const Region& l);

struct ConversionStats {
  std::size_t regions = 0;
  std::size_t squarings = 0;
  bool closedEarly = false;
};

/// A semilinear relation S over N^{2d} with (s, t) in S iff s ~ t.
semilinear::SemilinearSet cong_to_semilinear(const CongruenceBasis& r, ConversionStats* stats = nullptr);

}  // namespace pdvass::cong
