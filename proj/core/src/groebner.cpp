#include "hk/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hk/errors.hpp"
#include "hk/fp_linalg.hpp"

namespace hk {

namespace {

struct TermBudget {
  std::size_t remaining;
  void charge(std::size_t n) {
    if (n > remaining)
      throw capacity_error(
          "groebner_basis: monomial-count cap exceeded; rerun with a larger "
          "cap");
    remaining -= n;
  }
};

FpPoly normal_form_budgeted(FpPoly f, const std::vector<FpPoly>& basis,
                            TermBudget* budget) {
  if (f.is_zero()) return f;
  const std::uint32_t p = f.characteristic();
  std::vector<FpPoly::Term> remainder;
  while (!f.is_zero()) {
    if (budget) budget->charge(1);
    const auto& [lm, lc] = f.lead();
    bool reduced = false;
    for (const FpPoly& g : basis) {
      if (g.is_zero()) continue;
      const auto& [gm, gc] = g.lead();
      if (!gm.divides(lm)) continue;
      std::uint32_t factor = static_cast<std::uint32_t>(
          std::uint64_t(lc) * mod_inverse(gc, p) % p);
      f = f - g.times_term(gm.quotient_of(lm), factor);
      if (budget) budget->charge(g.terms().size());
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(f.lead());
      f = f - FpPoly::from_terms(p, f.arity(), {f.lead()});
    }
  }
  return FpPoly::from_terms(p, f.arity(), std::move(remainder));
}

}  // namespace

FpPoly normal_form(FpPoly f, const std::vector<FpPoly>& basis) {
  return normal_form_budgeted(std::move(f), basis, nullptr);
}

std::vector<FpPoly> groebner_basis(std::vector<FpPoly> gens,
                                   std::size_t term_cap) {
  std::erase_if(gens, [](const FpPoly& g) { return g.is_zero(); });
  if (gens.empty()) return gens;
  const std::uint32_t p = gens.front().characteristic();
  const std::size_t arity = gens.front().arity();
  for (const FpPoly& g : gens)
    if (g.characteristic() != p || g.arity() != arity)
      throw std::invalid_argument("groebner_basis: mixed rings");
  TermBudget budget{term_cap};

  std::vector<FpPoly> basis;
  auto add_poly = [&](FpPoly f) {
    basis.push_back(std::move(f));
    return basis.size() - 1;
  };
  struct Pair {
    std::size_t i, j;
    std::uint64_t lcm_deg;
  };
  std::deque<Pair> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].lead().first;
      const Monomial& b = basis[j].lead().first;
      Monomial l = Monomial::lcm(a, b);
      // coprime leads: the S-polynomial reduces to zero
      if (l.degree() == a.degree() + b.degree()) continue;
      pairs.push_back({i, j, l.degree()});
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& x, const Pair& y) {
                       return x.lcm_deg < y.lcm_deg;
                     });
  };

  for (FpPoly& g : gens) {
    FpPoly r = normal_form_budgeted(std::move(g), basis, &budget);
    if (!r.is_zero()) push_pairs_for(add_poly(std::move(r)));
  }

  while (!pairs.empty()) {
    Pair pr = pairs.front();
    pairs.pop_front();
    const FpPoly& fi = basis[pr.i];
    const FpPoly& fj = basis[pr.j];
    const auto& [mi, ci] = fi.lead();
    const auto& [mj, cj] = fj.lead();
    Monomial l = Monomial::lcm(mi, mj);
    FpPoly s = fi.times_term(mi.quotient_of(l), mod_inverse(ci, p)) -
               fj.times_term(mj.quotient_of(l), mod_inverse(cj, p));
    budget.charge(s.terms().size());
    FpPoly r = normal_form_budgeted(std::move(s), basis, &budget);
    if (!r.is_zero()) push_pairs_for(add_poly(std::move(r)));
  }

  // reduce: drop members whose lead is divisible by another lead, then
  // normal-form the tails
  std::vector<FpPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].lead().first;
      const Monomial& b = basis[i].lead().first;
      if (a.divides(b) && !(a == b && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FpPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form_budgeted(std::move(minimal[i]), others, &budget);
  }
  std::erase_if(minimal, [](const FpPoly& g) { return g.is_zero(); });
  return minimal;
}

}  // namespace hk
