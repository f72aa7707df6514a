#ifndef HK_MONOMIAL_HPP
#define HK_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hk/rat.hpp"

namespace hk {

/// Exponent vector of fixed arity.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t arity() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial scaled(std::uint64_t q) const;
  Monomial operator*(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// other / *this; requires divisibility.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  std::vector<std::uint32_t> e_;
};

/// Finitely generated monomial ideal held by its minimal generating
/// antichain (no generator divides another).
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  /// Minimalizes: drops duplicates and divisible generators.
  static MonomialIdeal from_generators(std::size_t arity,
                                       std::vector<Monomial> gens);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  /// Every variable appears as a pure power among the generators, which is
  /// equivalent to finite colength.
  bool is_m_primary() const;

private:
  std::size_t arity_ = 0;
  std::vector<Monomial> gens_;
};

/// Generators scaled by q, re-minimalized. Requires q >= 1.
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint64_t q);

/// Number of standard monomials below the staircase. Throws
/// infinite_colength_error when some variable has no pure power among the
/// generators.
Int monomial_colength(const MonomialIdeal& ideal);

/// Colength of the ordinary power I^n. Requires n >= 1 and an m-primary
/// ideal.
Int ordinary_power_colength(const MonomialIdeal& ideal, unsigned n);

}  // namespace hk

#endif  // HK_MONOMIAL_HPP
