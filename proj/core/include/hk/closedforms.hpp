#ifndef HK_CLOSEDFORMS_HPP
#define HK_CLOSEDFORMS_HPP

#include <vector>

#include "hk/piecewise.hpp"
#include "hk/rat.hpp"

namespace hk {

/// Integer Taylor coefficients c_d of d! * [x^d](sec x + tan x),
/// c_0 = c_1 = 1; all entries positive.
struct ZigzagTable {
  std::vector<Int> values;  // c_0 .. c_dmax
};

/// True when p is a prime (deterministic trial division).
bool is_prime(unsigned long long p);

/// Hilbert-Kunz multiplicity of the order-r Veronese subring in d
/// variables: C(d+r-1, d) / r. Requires d >= 1, r >= 1.
Rat veronese_hk(int d, long long r);

/// Hilbert-Kunz multiplicity of the nondegenerate quadric hypersurface of
/// dimension d in characteristic p (p an odd prime): 2, 3/2, 4/3 for
/// d = 1, 2, 3 and (29p^2+15)/(24p^2+12) for d = 4. Throws
/// unsupported_dimension_error for d outside 1..4 and
/// bad_characteristic_error when p is 2 or not prime.
Rat quadric_hk(int d, long long p);

/// c_0..c_dmax via the boustrophedon (zigzag-triangle) recurrence with
/// exact integers.
ZigzagTable zigzag(int dmax);

/// 1 + c_d/d!, the large-p limit of the dimension-d quadric multiplicity.
Rat monsky_limit(int d);

/// Hilbert-Kunz multiplicity of the rational normal scroll with parameter
/// n: (n+2) * (1/2 + 1/(6(n+1))). Requires n >= 0.
Rat scroll_hk(long long n);

/// Area profile f(t) of the scroll's uncovered region, as a piecewise
/// polynomial with breakpoints {0, 1, (n+2)/(n+1), 2} and zero tails:
///   [0,1):            (n+2) t^2 / 2
///   [1,(n+2)/(n+1)):  (n+2) t^2 / 2 - (n+4)(n+2)(t-1)^2 / 2
///   [(n+2)/(n+1),2):  (n+2) t (2-t)/2 + (n+2)(2-t)^2/(2n)
///   [2,inf):          0
/// For n = 0 the middle breakpoint coincides with 2 and the profile
/// degenerates to the two-piece form whose integral is 4/3.
PiecewisePoly scroll_profile(long long n);

}  // namespace hk

#endif  // HK_CLOSEDFORMS_HPP
