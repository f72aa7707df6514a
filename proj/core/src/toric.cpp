#include "hk/toric.hpp"

#include <stdexcept>

namespace hk {

std::vector<std::pair<long long, long long>> ScrollPolygon::vertices() const {
  std::vector<std::pair<long long, long long>> v = {
      {0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (long long j = 1; j <= n; ++j) v.emplace_back(-j, 1);
  return v;
}

bool ScrollPolygon::contains_dilated(long long deg, long long x,
                                     long long y) const {
  return 0 <= y && y <= deg && x <= deg && x + n * y >= 0;
}

long long scroll_slice_count(long long n, long long q, long long deg) {
  if (n < 0) throw std::invalid_argument("scroll_slice_count: n < 0");
  if (q < 1) throw std::invalid_argument("scroll_slice_count: q < 1");
  if (deg < 0) throw std::invalid_argument("scroll_slice_count: deg < 0");
  ScrollPolygon poly{n};
  const long long m = deg - q;  // shifts cover only at levels deg >= q
  std::vector<std::pair<long long, long long>> shifts;
  if (m >= 0) {
    shifts = {{0, 0}, {q, 0}, {q, q}, {0, q}};
    for (long long j = 1; j <= n; ++j) shifts.emplace_back(-j * q, q);
  }
  long long count = 0;
  for (long long y = 0; y <= deg; ++y) {
    // x range of the slice: -n*y <= x <= deg
    for (long long x = -n * y; x <= deg; ++x) {
      bool covered = false;
      for (const auto& [u, v] : shifts)
        if (poly.contains_dilated(m, x - u, y - v)) {
          covered = true;
          break;
        }
      if (!covered) ++count;
    }
  }
  return count;
}

ShiftedCoverCount scroll_cover_counts(long long n, long long q) {
  ShiftedCoverCount out;
  out.q = q;
  out.total = Int(0);
  for (long long deg = 0; deg < 2 * q; ++deg) {
    long long c = scroll_slice_count(n, q, deg);
    out.per_degree.push_back(c);
    out.total += c;
  }
  return out;
}

Int scroll_colength(long long n, long long q) {
  return scroll_cover_counts(n, q).total;
}

Rat scroll_volume_check(long long n, const Rat& t) {
  if (n < 0) throw std::invalid_argument("scroll_volume_check: n < 0");
  if (t < Rat(0) || t > Rat(2))
    throw std::domain_error("scroll_volume_check: t outside [0, 2]");
  Rat e(n + 2);
  auto dilated_area = [&](const Rat& s) { return e * s.pow(2) / Rat(2); };
  if (t < Rat(1)) return dilated_area(t);
  Rat kappa = Rat(n + 2) / Rat(n + 1);
  if (t < kappa) return dilated_area(t) - Rat(n + 4) * dilated_area(t - Rat(1));
  if (t == Rat(2)) return Rat(0);
  // remaining band plus the n+2 congruent corner triangles
  return e * t * (Rat(2) - t) / Rat(2) +
         e * (Rat(2) - t).pow(2) / Rat(2 * n);
}

}  // namespace hk
