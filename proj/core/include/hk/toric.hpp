#ifndef HK_TORIC_HPP
#define HK_TORIC_HPP

#include <utility>
#include <vector>

#include "hk/rat.hpp"

namespace hk {

/// The scroll polygon P with vertex set
/// (0,0), (1,0), (1,1), (0,1), (-1,1), ..., (-n,1); equivalently
/// {(x,y) : 0 <= y <= 1, x <= 1, x + n*y >= 0}.
struct ScrollPolygon {
  long long n = 0;

  std::vector<std::pair<long long, long long>> vertices() const;
  /// Integer membership of (x, y) in the dilation deg * P.
  bool contains_dilated(long long deg, long long x, long long y) const;
};

/// Lattice points of deg*P not covered by any shift (a,b) + (deg-q)*P for
/// (a,b) in the scaled vertex set Gamma_q. Shifts only exist at levels
/// deg >= q (the covering monomials have degree q).
long long scroll_slice_count(long long n, long long q, long long deg);

/// Per-degree uncovered counts for one Frobenius power; entries vanish
/// from degree 2q on.
struct ShiftedCoverCount {
  long long q = 0;
  std::vector<long long> per_degree;  // degrees 0 .. 2q-1
  Int total;
};

ShiftedCoverCount scroll_cover_counts(long long n, long long q);

/// Sum of all slice counts: the exact colength of the scroll at Frobenius
/// power q.
Int scroll_colength(long long n, long long q);

/// The uncovered area at dilation t from the case formulas of the scroll
/// profile; defined for t in [0, 2] (throws std::domain_error outside).
/// Agrees with scroll_profile(n) pointwise.
Rat scroll_volume_check(long long n, const Rat& t);

}  // namespace hk

#endif  // HK_TORIC_HPP
