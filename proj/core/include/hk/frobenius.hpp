#ifndef HK_FROBENIUS_HPP
#define HK_FROBENIUS_HPP

#include <vector>

#include "hk/fp_linalg.hpp"
#include "hk/fppoly.hpp"
#include "hk/rat.hpp"
#include "hk/ringspec.hpp"

namespace hk {

struct EngineOptions {
  RankOptions rank;
  /// Monomial-count cap for the normal-form engine.
  std::size_t groebner_term_cap = 8'000'000;
  /// Cap on the dimension q^d of the truncated polynomial ring a colength
  /// engine is allowed to materialize.
  std::size_t basis_cap = 80'000'000;
};

/// Empirical Hilbert-Kunz data: exact lengths at a ladder of Frobenius
/// powers, their normalized ratios, and a least-squares extrapolation.
struct ColengthSequence {
  int dim = 0;
  std::vector<std::pair<unsigned long long, Int>> points;  // (q, length)
  Rat estimate;

  /// length/q^dim per point, recomputed from `points`.
  std::vector<Rat> ratios() const;
};

/// Exact length of k[x_0..x_d]/(x_0^2 - phi, x_0^q, ..., x_d^q) for the
/// quadric description. Uses the reduction documented in
/// docs/colength-engines.md: the length equals
///   len(B/phi^((q+1)/2) B) + len(B/phi^((q-1)/2) B)
/// over B = k[x_1..x_d]/(x_1^q..x_d^q), each computed as dim B minus the
/// rank of a multiplication map. Requires q a power of the odd prime p.
Int colength_quadric(const RingSpec& spec, unsigned long long q,
                     const EngineOptions& options = {});

/// Dimension of k[x_1..x_arity]/(gens, x_i^q for all i) over F_p via the
/// degrevlex normal-form engine.
Int colength_general(unsigned long long p, std::size_t arity,
                     const std::vector<FpPoly>& gens, unsigned long long q,
                     const EngineOptions& options = {});

/// Runs the matching engine over an ascending ladder of Frobenius powers
/// and extrapolates the leading coefficient of
/// length = alpha q^d + beta q^(d-1) by exact least squares over the last
/// min(3, #points) points.
ColengthSequence hk_estimate(const RingSpec& spec,
                             const std::vector<unsigned long long>& q_list,
                             const EngineOptions& options = {});

}  // namespace hk

#endif  // HK_FROBENIUS_HPP
