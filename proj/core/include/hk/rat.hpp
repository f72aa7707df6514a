#ifndef HK_RAT_HPP
#define HK_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hk {

/// Arbitrary-precision integer. All counting results (colengths, lattice
/// points, zigzag numbers) use this type; fixed-width arithmetic is never
/// exposed.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive
/// denominator. This is the carrier for every exact value in the library;
/// no operation on Rat ever rounds.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rat(long long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : v_(n) {}         // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  const Int numerator() const { return boost::multiprecision::numerator(v_); }
  const Int denominator() const {
    return boost::multiprecision::denominator(v_);
  }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on o == 0

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// x^k for integer k; negative k inverts (throws std::domain_error on 0).
  Rat pow(long long k) const;

  Rat abs() const { return v_ < 0 ? -*this : *this; }
  Int floor() const;
  Int ceil() const;

  /// Canonical form: "num/den", with "/den" omitted when den == 1.
  std::string to_string() const;

  /// Parses the canonical form (optionally signed). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rat parse(std::string_view text);

  /// Nearest double.
  double to_double() const { return v_.convert_to<double>(); }

  /// Correctly rounded decimal rendering with `digits` significant digits
  /// (round half away from zero). Fixed notation for moderate magnitudes,
  /// scientific otherwise.
  std::string decimal(int digits = 6) const;

private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Binomial coefficient C(n, k); returns 0 when k > n.
Int binom(unsigned long long n, unsigned long long k);

/// n! as an exact integer.
Int factorial(unsigned n);

}  // namespace hk

#endif  // HK_RAT_HPP
