#ifndef HK_BOUNDS_HPP
#define HK_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "hk/rat.hpp"

namespace hk {

enum class BoundMethod {
  Key,
  KeyOptimized,
  Hyp2Est,
  BetaHyp,
  CaseTable3D,
  CaseTable4D,
  IneqMul,
};

const char* bound_method_name(BoundMethod m);

/// A lower bound on the Hilbert-Kunz multiplicity together with the
/// parameters the producing formula consumed and a human-readable
/// derivation label.
struct BoundReport {
  Rat value;
  BoundMethod method = BoundMethod::Key;
  std::vector<std::pair<std::string, Rat>> parameters;
  std::string anchor;

  /// JSON object {value, decimal, method, parameters, anchor}.
  std::string to_json_string(int digits = 6) const;
};

/// Upper bound on the number of generators of m over the tight closure of
/// a minimal reduction: e-1 in general, e-2 when not F-rational; never
/// negative.
long long sally_generator_bound(long long e, bool f_rational);

/// e * (v_s - r*(s-1)^d / d!), the main volume lower bound. Valid for any
/// rational s >= 1; r is clamped at 0.
Rat key_lower_bound(long long e, int d, long long r, const Rat& s);

/// e * (s^3/6 - (e+1)(s-1)^3/6), the non-F-rational three-dimensional
/// specialization; equals key_lower_bound(e, 3, e-2, s) on its domain.
/// Throws std::domain_error for s outside [1, 2].
Rat key_lower_bound_nonfr_3d(long long e, const Rat& s);

struct KeyOptimum {
  Rat s_star;
  Rat value;
};

/// Exact maximum of key_lower_bound(e, d, r, s) over all rationals
/// s in [1, 2] with denominator <= denominator_limit (Farey enumeration).
/// Ties break to the smallest denominator, then the smallest s.
KeyOptimum optimize_key_bound(long long e, int d, long long r,
                              long denominator_limit);

/// Supremum of the d=3, r=e-1 bound over s in [1, 2]:
/// (e/6) * ((e+2+sqrt(e+2)) / (e+1))^2. Requires e >= 2.
double key_argmax_closed_form_3d(long long e);

/// Weighted-order bound for x^2 = phi(y, z, w) with ord(y,z,w) =
/// (1/a, 1/b, 1/c): value = 2 - (abc/12)(N^3 - n^3) where
/// N = 1/a + 1/b + 1/c - 1/2, n = max(0, N - 2/c). Requires
/// 2 <= a <= b <= c.
BoundReport hypersurface_weight_bound(long long a, long long b, long long c);

/// beta(d) * e, the central-slab hypersurface bound.
Rat beta_hypersurface_bound(long long e, int d);

/// Three-dimensional case split by multiplicity. The F-rational path uses
/// r = e-1 with the case s of the source table (s=2 for e=2, s=7/4 for
/// e=3, s=3/2 for 4<=e<=12, e/3! for e>=13); the non-F-rational path takes
/// the best of the s-grid {3/2, 7/4, 2} with r = e-2 and the e/3! floor.
BoundReport classify_3d(long long e, bool f_rational);

/// Four-dimensional case split: e(13-e)/24 for 3<=e<=10 (s=2),
/// e(78-e)/384 for 11<=e<=29 (s=3/2), e/4! for e>=30. For e=2 the generic
/// bound at s=2 is returned; the sharp value for e=2 lives in the closed
/// forms.
BoundReport classify_4d(long long e);

/// 2 - 4 * weighted_slab_volume((1/2,1/2,1/2,1/3), 2/3) = 411/324.
Rat quadric_4d_weighted_bound();

/// 3/2 - 2/(3c^2); equals hypersurface_weight_bound(2, 2, c). Requires
/// c >= 3.
Rat a1_chain_bound(long long c);

}  // namespace hk

#endif  // HK_BOUNDS_HPP
