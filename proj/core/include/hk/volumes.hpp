#ifndef HK_VOLUMES_HPP
#define HK_VOLUMES_HPP

#include <vector>

#include "hk/piecewise.hpp"
#include "hk/rat.hpp"

namespace hk {

/// Region {x in [0,1]^d : sum_i weights[i]*x_i <= threshold}.
struct SlabSpec {
  std::vector<Rat> weights;  // all > 0, length d >= 1
  Rat threshold;
};

/// Inclusion-exclusion over all 2^d corner subsets; exponential in d, so
/// the dimension is capped here.
inline constexpr int kMaxSlabDim = 24;

/// vol{x in [0,1]^d : sum x_i <= s}. Exact; 0 for s <= 0, 1 for s >= d.
Rat box_simplex_volume(int d, const Rat& s);

/// 1 - box_simplex_volume(d, s).
Rat box_simplex_complement(int d, const Rat& s);

/// The volume above as a piecewise polynomial in s, breakpoints 0..d.
PiecewisePoly box_simplex_profile(int d);

/// vol{x in [0,1]^d : sum w_i x_i <= t} by inclusion-exclusion.
Rat weighted_slab_volume(const SlabSpec& spec);

/// Central-slab constant for hypersurfaces of dimension d (the alternating
/// binomial sum). Indexed by the hypersurface dimension d, so the value for
/// d = 2 is 3/4, d = 3 is 2/3, ...
Rat beta(int d);

/// Same constant via 1 - v_{(d-1)/2} - v'_{(d+1)/2}; requires d >= 1.
Rat beta_via_volume(int d);

/// Same constant via quadrature of (1/pi) * integral of (sin t / t)^(d+1)
/// over a truncated symmetric interval, with tail corrections for
/// d <= 1. Total truncation + step error is below 1e-6 (see the notes in
/// the implementation); `steps` >= 1000 sets a floor on the Simpson
/// subdivision count.
double beta_numeric(int d, long steps);

}  // namespace hk

#endif  // HK_VOLUMES_HPP
