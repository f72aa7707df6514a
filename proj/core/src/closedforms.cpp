#include "hk/closedforms.hpp"

#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

bool is_prime(unsigned long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (unsigned long long f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

Rat veronese_hk(int d, long long r) {
  if (d < 1) throw std::invalid_argument("veronese_hk: d < 1");
  if (r < 1) throw std::invalid_argument("veronese_hk: r < 1");
  return Rat(binom(static_cast<unsigned long long>(d + r - 1),
                   static_cast<unsigned long long>(d)),
             Int(r));
}

Rat quadric_hk(int d, long long p) {
  if (d < 1 || d > 4)
    throw unsupported_dimension_error(
        "quadric_hk: closed form only available for 1 <= d <= 4");
  if (p < 3 || !is_prime(static_cast<unsigned long long>(p)))
    throw bad_characteristic_error(
        "quadric_hk: characteristic must be an odd prime");
  switch (d) {
    case 1: return Rat(2);
    case 2: return Rat(3, 2);
    case 3: return Rat(4, 3);
    default: break;
  }
  Int p2 = Int(p) * Int(p);
  return Rat(29 * p2 + 15, 24 * p2 + 12);
}

ZigzagTable zigzag(int dmax) {
  if (dmax < 0) throw std::invalid_argument("zigzag: dmax < 0");
  // Boustrophedon triangle: T(0,0) = 1, T(n,0) = 0,
  // T(n,k) = T(n,k-1) + T(n-1,n-k); c_n = T(n,n).
  ZigzagTable table;
  table.values.reserve(static_cast<std::size_t>(dmax) + 1);
  std::vector<Int> prev{Int(1)};
  table.values.push_back(Int(1));
  for (int n = 1; n <= dmax; ++n) {
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    row[0] = 0;
    for (int k = 1; k <= n; ++k)
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] +
          prev[static_cast<std::size_t>(n - k)];
    table.values.push_back(row.back());
    prev = std::move(row);
  }
  return table;
}

Rat monsky_limit(int d) {
  if (d < 1) throw std::invalid_argument("monsky_limit: d < 1");
  ZigzagTable t = zigzag(d);
  return Rat(1) + Rat(t.values.back(), factorial(static_cast<unsigned>(d)));
}

Rat scroll_hk(long long n) {
  if (n < 0) throw std::invalid_argument("scroll_hk: n < 0");
  return Rat(n + 2) * (Rat(1, 2) + Rat(1, 6 * (n + 1)));
}

PiecewisePoly scroll_profile(long long n) {
  if (n < 0) throw std::invalid_argument("scroll_profile: n < 0");
  Rat e(n + 2);  // the scroll's multiplicity, also vol(P)/(1/2)
  Poly dilation{Rat(0), Rat(0), e / Rat(2)};  // (n+2) t^2 / 2
  // vol(tP) - (n+4) vol((t-1)P)
  Rat m = Rat(n + 4) * e / Rat(2);
  Poly middle{-m, Rat(2) * m, e / Rat(2) - m};
  if (n == 0) {
    // (n+2)/(n+1) == 2: the third case is empty
    return PiecewisePoly({Rat(0), Rat(1), Rat(2)},
                         {Poly{}, dilation, middle, Poly{}});
  }
  Rat kappa(Int(n + 2), Int(n + 1));
  // (n+2) t(2-t)/2 + (n+2)(2-t)^2/(2n)
  Poly upper{e * Rat(2, n), e * (Rat(1) - Rat(2, n)),
             e * (Rat(-1, 2) + Rat(1, 2 * n))};
  return PiecewisePoly({Rat(0), Rat(1), kappa, Rat(2)},
                       {Poly{}, dilation, middle, upper, Poly{}});
}

}  // namespace hk
