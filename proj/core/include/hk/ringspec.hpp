#ifndef HK_RINGSPEC_HPP
#define HK_RINGSPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hk/fppoly.hpp"
#include "hk/monomial.hpp"

namespace hk {

/// Declarative description of a ring instance, consumed by the colength
/// engines. Parsed from the text format documented in docs/ringspec.md,
/// e.g.
///   monomial{p=3; vars=x,y; gens=x^2, x*y, y^3}
///   quadric{p=3; d=3; phi=y^2+z^2+w^2}
///   hypersurface{p=5; f=x0^2+x1^3+x2^3+x3^3}
///   scroll{n=1}
struct RingSpec {
  enum class Kind {
    MonomialQuotient,
    QuadricHypersurface,
    GeneralHypersurface,
    Scroll,
  };

  Kind kind = Kind::MonomialQuotient;
  unsigned long long p = 0;         // odd prime; unused for scroll
  std::vector<std::string> var_names;

  MonomialIdeal ideal;              // MonomialQuotient
  int quadric_dim = 0;              // QuadricHypersurface: d, phi in d vars
  FpPoly phi;                       // x0^2 - phi(x1..xd), phi in m^2
  FpPoly f;                         // GeneralHypersurface
  long long scroll_n = 0;           // Scroll

  /// Krull dimension used to normalize colengths.
  int dimension() const;

  /// Hilbert-Samuel multiplicity when determined by the description:
  /// 2 for quadrics, ord(f) for general hypersurfaces; -1 otherwise.
  long long hypersurface_multiplicity() const;

  std::string to_string() const;
};

/// Parses the whitespace-insensitive ring-spec grammar. Throws
/// spec_parse_error on malformed text and bad_characteristic_error when p
/// is 2 or not prime.
RingSpec parse_ring_spec(std::string_view text);

}  // namespace hk

#endif  // HK_RINGSPEC_HPP
