#ifndef HK_FPPOLY_HPP
#define HK_FPPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hk/monomial.hpp"

namespace hk {

/// Degree-compatible monomial order used throughout the normal-form
/// engine: degree-reverse-lexicographic. a precedes b (a > b) when
/// deg a > deg b, or degrees tie and the rightmost differing exponent of
/// a is smaller.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

/// Multivariate polynomial over F_p. Terms are kept sorted with the
/// leading term first (degrevlex), coefficients in (0, p); no zero
/// coefficients are stored and all monomials share the polynomial's arity.
class FpPoly {
public:
  using Term = std::pair<Monomial, std::uint32_t>;

  FpPoly() = default;
  FpPoly(std::uint32_t p, std::size_t arity) : p_(p), arity_(arity) {}

  /// Builds from an unsorted term list, collecting like terms mod p.
  static FpPoly from_terms(std::uint32_t p, std::size_t arity,
                           std::vector<Term> terms);

  std::uint32_t characteristic() const { return p_; }
  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }

  /// Minimum total degree among terms (order of vanishing); 0 for the
  /// zero polynomial.
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  bool is_homogeneous() const;
  bool uses_variable(std::size_t i) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly scaled(std::uint32_t c) const;
  FpPoly times_term(const Monomial& m, std::uint32_t c) const;
  FpPoly operator*(const FpPoly& o) const;

  /// Product with every monomial having an exponent >= q dropped. Valid
  /// for computing powers inside k[x]/(x_i^q): dropped monomials only
  /// generate further droppable ones.
  FpPoly mul_truncated(const FpPoly& o, std::uint64_t q) const;
  FpPoly pow_truncated(std::uint64_t k, std::uint64_t q) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  std::uint32_t p_ = 0;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

}  // namespace hk

#endif  // HK_FPPOLY_HPP
