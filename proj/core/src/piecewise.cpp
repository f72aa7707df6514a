#include "hk/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

Rat eval_poly(const Poly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

Poly antiderivative(const Poly& p) {
  Poly a(p.size() + 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    a[i + 1] = p[i] / Rat(static_cast<long long>(i) + 1);
  return a;
}

bool is_zero_poly(const Poly& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const Rat& c) { return c.is_zero(); });
}

}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints,
                             std::vector<Poly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument(
          "PiecewisePoly: breakpoints must be strictly increasing");
  if (pieces_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument(
        "PiecewisePoly: need exactly one piece per interval "
        "(breakpoints + 1)");
  if (pieces_.front().size() > 1 || pieces_.back().size() > 1)
    throw std::invalid_argument("PiecewisePoly: tail pieces must be constant");
}

PiecewisePoly PiecewisePoly::constant(const Rat& c) {
  return PiecewisePoly({}, {Poly{c}});
}

std::size_t PiecewisePoly::piece_index(const Rat& x) const {
  // right-continuous: at x == b_i the piece to the right applies
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

Rat PiecewisePoly::eval(const Rat& x) const {
  return eval_poly(pieces_[piece_index(x)], x);
}

Rat PiecewisePoly::integrate(const Rat& a, const Rat& b) const {
  if (a > b)
    throw std::invalid_argument("PiecewisePoly::integrate: a > b");
  Rat total(0);
  Rat lo = a;
  std::size_t i = piece_index(a);
  while (lo < b) {
    Rat hi = (i < breakpoints_.size() && breakpoints_[i] < b)
                 ? breakpoints_[i]
                 : b;
    Poly anti = antiderivative(pieces_[i]);
    total += eval_poly(anti, hi) - eval_poly(anti, lo);
    lo = hi;
    ++i;
  }
  return total;
}

Rat PiecewisePoly::integrate_to_infinity(const Rat& a) const {
  if (!is_zero_poly(pieces_.back()))
    throw unbounded_integral_error(
        "integrate_to_infinity: right tail is nonzero");
  if (breakpoints_.empty()) return Rat(0);
  const Rat& last = breakpoints_.back();
  if (a >= last) return Rat(0);
  return integrate(a, last);
}

}  // namespace hk
