#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

/// A computation exceeded a configured resource limit (monomial cap,
/// sparse elimination memory cap, ...). Callers can retry with a larger
/// limit; the CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Integration of a piecewise polynomial over an infinite interval whose
/// tail piece is not identically zero.
class unbounded_integral_error : public std::domain_error {
public:
  explicit unbounded_integral_error(const std::string& what)
      : std::domain_error(what) {}
};

/// A monomial ideal without a pure power in some variable has infinite
/// colength.
class infinite_colength_error : public std::domain_error {
public:
  explicit infinite_colength_error(const std::string& what)
      : std::domain_error(what) {}
};

/// Closed forms are only available for a fixed range of dimensions.
class unsupported_dimension_error : public std::domain_error {
public:
  explicit unsupported_dimension_error(const std::string& what)
      : std::domain_error(what) {}
};

/// The characteristic must be an odd prime.
class bad_characteristic_error : public std::invalid_argument {
public:
  explicit bad_characteristic_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Malformed ring-spec text.
class spec_parse_error : public std::invalid_argument {
public:
  explicit spec_parse_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace hk

#endif  // HK_ERRORS_HPP
