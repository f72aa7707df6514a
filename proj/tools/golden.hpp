#ifndef HK_GOLDEN_HPP
#define HK_GOLDEN_HPP

#include <functional>
#include <string>
#include <vector>

#include "hk/rat.hpp"

namespace hk::cli {

/// One replayed exact claim: computed value against the frozen expected
/// value.
struct GoldenItem {
  std::string id;
  std::string label;
  std::function<Rat()> compute;
  Rat expected;
};

/// One replayed floating-point claim with an absolute tolerance.
struct GoldenNumericItem {
  std::string id;
  std::string label;
  std::function<double()> compute;
  double expected;
  double tolerance;
};

struct GoldenSuite {
  std::vector<GoldenItem> exact;
  std::vector<GoldenNumericItem> numeric;
};

/// The full table of replayed values (bound constants, closed forms,
/// volume identities, optimizer attainments).
GoldenSuite golden_suite();

}  // namespace hk::cli

#endif  // HK_GOLDEN_HPP
