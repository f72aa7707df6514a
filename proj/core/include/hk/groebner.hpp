#ifndef HK_GROEBNER_HPP
#define HK_GROEBNER_HPP

#include <vector>

#include "hk/fppoly.hpp"

namespace hk {

/// Full normal form of f against basis (every term reduced).
FpPoly normal_form(FpPoly f, const std::vector<FpPoly>& basis);

/// Buchberger's algorithm under degrevlex, with the coprime-lcm criterion.
/// `term_cap` bounds the total number of terms processed during
/// reductions; exceeding it throws capacity_error. Returns a reduced
/// basis.
std::vector<FpPoly> groebner_basis(std::vector<FpPoly> gens,
                                   std::size_t term_cap);

}  // namespace hk

#endif  // HK_GROEBNER_HPP
