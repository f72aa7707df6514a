#ifndef HK_PIECEWISE_HPP
#define HK_PIECEWISE_HPP

#include <vector>

#include "hk/rat.hpp"

namespace hk {

/// Polynomial with rational coefficients, ascending degree. Empty vector
/// is the zero polynomial.
using Poly = std::vector<Rat>;

Rat eval_poly(const Poly& p, const Rat& x);

/// Univariate piecewise polynomial over rational breakpoints.
///
/// With breakpoints b_0 < ... < b_{m-1} there are m+1 pieces:
/// piece 0 on (-inf, b_0), piece i on [b_{i-1}, b_i), piece m on
/// [b_{m-1}, inf). Evaluation is right-continuous at breakpoints. The two
/// tail pieces must be constant.
class PiecewisePoly {
public:
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces);

  static PiecewisePoly constant(const Rat& c);

  Rat eval(const Rat& x) const;

  /// Exact definite integral over [a, b]; requires a <= b.
  Rat integrate(const Rat& a, const Rat& b) const;

  /// Exact integral over [a, +inf). Throws unbounded_integral_error when
  /// the right tail is nonzero.
  Rat integrate_to_infinity(const Rat& a) const;

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Poly>& pieces() const { return pieces_; }

private:
  std::size_t piece_index(const Rat& x) const;

  std::vector<Rat> breakpoints_;
  std::vector<Poly> pieces_;
};

}  // namespace hk

#endif  // HK_PIECEWISE_HPP
