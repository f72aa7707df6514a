#include "hk/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hk/errors.hpp"
#include "hk/groebner.hpp"
#include "hk/toric.hpp"

namespace hk {

namespace {

bool is_power_of(unsigned long long q, unsigned long long p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

void check_q(const RingSpec& spec, unsigned long long q) {
  if (q < 1) throw std::invalid_argument("colength: q < 1");
  if (q > 1 && !is_power_of(q, spec.p))
    throw std::invalid_argument("colength: q = " + std::to_string(q) +
                                " is not a power of p = " +
                                std::to_string(spec.p));
}

// Rank of the multiplication-by-psi map on B = k[x_1..x_d]/(x_i^q), in the
// monomial basis indexed mixed-radix. Homogeneous psi acts degree-t ->
// degree-(t+deg psi), so the matrix splits into graded blocks; otherwise
// the full matrix goes through the dense/sparse dispatcher.
std::size_t rank_multiplication(const FpPoly& psi, unsigned long long q,
                                const EngineOptions& options) {
  if (psi.is_zero()) return 0;
  const std::size_t d = psi.arity();
  const std::uint32_t p = psi.characteristic();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (dim > options.basis_cap / q)
      throw capacity_error("colength_quadric: q^d exceeds the basis cap");
    dim *= static_cast<std::size_t>(q);
  }
  std::vector<std::uint32_t> exps(d, 0);
  auto step = [&](std::vector<std::uint32_t>& e) {
    for (std::size_t i = 0; i < d; ++i) {
      if (++e[i] < q) return true;
      e[i] = 0;
    }
    return false;
  };
  auto shifted_index = [&](const std::vector<std::uint32_t>& e,
                           const Monomial& m, std::size_t& out) {
    std::size_t idx = 0;
    for (std::size_t i = d; i-- > 0;) {
      std::uint64_t v = std::uint64_t(e[i]) + m[i];
      if (v >= q) return false;
      idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>(v);
    }
    out = idx;
    return true;
  };

  if (psi.is_homogeneous()) {
    const std::uint64_t t = psi.max_degree();
    const std::uint64_t maxdeg = static_cast<std::uint64_t>(d) * (q - 1);
    // bucket basis indices by total degree; position within the bucket
    std::vector<std::vector<std::size_t>> by_degree(maxdeg + 1);
    std::vector<std::uint32_t> pos(dim);
    {
      std::vector<std::uint32_t> e(d, 0);
      std::size_t idx = 0;
      do {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        pos[idx] = static_cast<std::uint32_t>(by_degree[deg].size());
        by_degree[deg].push_back(idx);
        ++idx;
      } while (step(e));
    }
    std::size_t rank = 0;
    for (std::uint64_t j = 0; j + t <= maxdeg; ++j) {
      const auto& cols_idx = by_degree[j];
      const auto& rows_idx = by_degree[j + t];
      if (cols_idx.empty() || rows_idx.empty()) continue;
      FpSparseMatrix block;
      block.rows = rows_idx.size();
      block.cols.resize(cols_idx.size());
      for (std::size_t c = 0; c < cols_idx.size(); ++c) {
        std::vector<std::uint32_t> e(d);
        std::size_t rest = cols_idx[c];
        for (std::size_t i = 0; i < d; ++i) {
          e[i] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
        }
        auto& col = block.cols[c];
        for (const auto& [m, coef] : psi.terms()) {
          std::size_t target;
          if (shifted_index(e, m, target)) col.emplace_back(pos[target], coef);
        }
        std::sort(col.begin(), col.end());
      }
      rank += rank_mod_p(block, p, options.rank);
    }
    return rank;
  }

  FpSparseMatrix full;
  full.rows = dim;
  full.cols.resize(dim);
  {
    std::vector<std::uint32_t> e(d, 0);
    std::size_t idx = 0;
    do {
      auto& col = full.cols[idx];
      for (const auto& [m, coef] : psi.terms()) {
        std::size_t target;
        if (shifted_index(e, m, target))
          col.emplace_back(static_cast<std::uint32_t>(target), coef);
      }
      std::sort(col.begin(), col.end());
      ++idx;
    } while (step(e));
  }
  return rank_mod_p(full, p, options.rank);
}

}  // namespace

std::vector<Rat> ColengthSequence::ratios() const {
  std::vector<Rat> out;
  out.reserve(points.size());
  for (const auto& [q, len] : points) {
    Int qd(1);
    for (int i = 0; i < dim; ++i) qd *= Int(q);
    out.emplace_back(len, qd);
  }
  return out;
}

Int colength_quadric(const RingSpec& spec, unsigned long long q,
                     const EngineOptions& options) {
  if (spec.kind != RingSpec::Kind::QuadricHypersurface)
    throw std::invalid_argument("colength_quadric: not a quadric spec");
  if (spec.p == 2)
    throw bad_characteristic_error("colength_quadric: characteristic 2");
  check_q(spec, q);
  const int d = spec.quadric_dim;
  Int dim = Int(1);
  for (int i = 0; i < d; ++i) dim *= Int(q);
  // x_0^q = x_0 * phi^((q-1)/2) modulo x_0^2 - phi (q odd), so the ideal
  // (x_0^q) in B + x_0 B is x_0 phi^((q-1)/2) B + phi^((q+1)/2) B.
  FpPoly psi_hi = spec.phi.pow_truncated((q + 1) / 2, q);
  FpPoly psi_lo = spec.phi.pow_truncated((q - 1) / 2, q);
  Int rank_hi(static_cast<unsigned long long>(
      rank_multiplication(psi_hi, q, options)));
  Int rank_lo(static_cast<unsigned long long>(
      rank_multiplication(psi_lo, q, options)));
  return (dim - rank_hi) + (dim - rank_lo);
}

Int colength_general(unsigned long long p, std::size_t arity,
                     const std::vector<FpPoly>& gens, unsigned long long q,
                     const EngineOptions& options) {
  if (p < 3 || p % 2 == 0)
    throw bad_characteristic_error("colength_general: p must be an odd prime");
  if (q < 1 || !is_power_of(q, p))
    throw std::invalid_argument("colength_general: q must be a power of p");
  std::vector<FpPoly> ideal = gens;
  for (const FpPoly& g : ideal)
    if (g.arity() != arity || g.characteristic() != p)
      throw std::invalid_argument("colength_general: ring mismatch");
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::uint32_t> e(arity, 0);
    if (q > std::numeric_limits<std::uint32_t>::max())
      throw capacity_error("colength_general: q too large");
    e[i] = static_cast<std::uint32_t>(q);
    ideal.push_back(FpPoly::from_terms(static_cast<std::uint32_t>(p), arity,
                                       {{Monomial(std::move(e)), 1}}));
  }
  std::vector<FpPoly> gb = groebner_basis(ideal, options.groebner_term_cap);
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const FpPoly& g : gb) leads.push_back(g.lead().first);
  return monomial_colength(MonomialIdeal::from_generators(arity, leads));
}

ColengthSequence hk_estimate(const RingSpec& spec,
                             const std::vector<unsigned long long>& q_list,
                             const EngineOptions& options) {
  if (q_list.empty()) throw std::invalid_argument("hk_estimate: empty q list");
  for (std::size_t i = 1; i < q_list.size(); ++i)
    if (q_list[i] <= q_list[i - 1])
      throw std::invalid_argument("hk_estimate: q list must be ascending");
  if (spec.kind == RingSpec::Kind::MonomialQuotient &&
      !spec.ideal.is_m_primary())
    throw infinite_colength_error(
        "hk_estimate: monomial ideal is not m-primary");

  ColengthSequence seq;
  seq.dim = spec.dimension();
  for (unsigned long long q : q_list) {
    Int len;
    switch (spec.kind) {
      case RingSpec::Kind::MonomialQuotient:
        check_q(spec, q);
        len = monomial_colength(frobenius_power(spec.ideal, q));
        break;
      case RingSpec::Kind::QuadricHypersurface:
        len = colength_quadric(spec, q, options);
        break;
      case RingSpec::Kind::GeneralHypersurface:
        check_q(spec, q);
        len = colength_general(spec.p, spec.var_names.size(), {spec.f}, q,
                               options);
        break;
      case RingSpec::Kind::Scroll:
        len = scroll_colength(spec.scroll_n, static_cast<long long>(q));
        break;
    }
    seq.points.emplace_back(q, std::move(len));
  }

  // exact least squares for length = alpha q^d + beta q^(d-1) over the
  // last window
  const std::size_t w = std::min<std::size_t>(3, seq.points.size());
  const std::size_t off = seq.points.size() - w;
  if (w == 1) {
    Int qd(1);
    for (int i = 0; i < seq.dim; ++i) qd *= Int(seq.points[off].first);
    seq.estimate = Rat(seq.points[off].second, qd);
    return seq;
  }
  Rat saa(0), sab(0), sbb(0), sal(0), sbl(0);
  for (std::size_t i = off; i < seq.points.size(); ++i) {
    Rat qa = Rat(Int(seq.points[i].first)).pow(seq.dim);
    Rat qb = seq.dim >= 1 ? Rat(Int(seq.points[i].first)).pow(seq.dim - 1)
                          : Rat(1);
    Rat L(seq.points[i].second);
    saa += qa * qa;
    sab += qa * qb;
    sbb += qb * qb;
    sal += qa * L;
    sbl += qb * L;
  }
  Rat det = saa * sbb - sab * sab;
  seq.estimate = (sal * sbb - sbl * sab) / det;
  return seq;
}

}  // namespace hk
