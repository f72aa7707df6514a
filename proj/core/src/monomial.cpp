#include "hk/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::scaled(std::uint64_t q) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(e_[i]) * q;
    if (v > std::numeric_limits<std::uint32_t>::max())
      throw std::overflow_error("Monomial::scaled: exponent overflow");
    e[i] = static_cast<std::uint32_t>(v);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + other.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = other.e_[i] - e_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string(
    const std::vector<std::string>& var_names) const {
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_names[i];
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t arity,
                                             std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.arity() != arity)
      throw std::invalid_argument("MonomialIdeal: arity mismatch");
  // Sort by degree, then lexicographically, dedupe; a generator is
  // redundant iff divisible by a kept one of smaller or equal degree
  // (equal-degree distinct monomials never divide each other).
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              auto da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal ideal;
  ideal.arity_ = arity;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : ideal.gens_) {
      if (kept.degree() >= g.degree()) break;
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) ideal.gens_.push_back(g);
  }
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_m_primary() const {
  if (arity_ == 0) return !gens_.empty();
  std::vector<bool> has_pure(arity_, false);
  for (const auto& g : gens_) {
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < arity_; ++i)
      if (g[i] > 0) {
        ++nz;
        which = i;
      }
    if (nz == 1) has_pure[which] = true;
  }
  return std::all_of(has_pure.begin(), has_pure.end(),
                     [](bool b) { return b; });
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("frobenius_power: q < 1");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.scaled(q));
  return MonomialIdeal::from_generators(ideal.arity(), gens);
}

namespace {

// Staircase count by slicing off the last variable: the slice at
// x_last = k is the ideal of generators with last exponent <= k, projected
// to the remaining variables. The projected generating set is kept as a
// minimal antichain incrementally, since slices only ever gain generators.
Int staircase_count(std::size_t arity, const std::vector<Monomial>& gens) {
  if (arity == 0) {
    for (const auto& g : gens)
      if (g.is_one()) return Int(0);
    return Int(1);
  }
  const std::size_t last = arity - 1;
  // bound: minimal pure power in the last variable
  std::uint32_t bound = 0;
  bool found = false;
  for (const auto& g : gens) {
    bool pure = g[last] > 0;
    for (std::size_t i = 0; pure && i + 1 < arity; ++i)
      if (g[i] > 0) pure = false;
    if (pure && (!found || g[last] < bound)) {
      bound = g[last];
      found = true;
    }
  }
  if (!found)
    throw infinite_colength_error(
        "monomial_colength: no pure power in some variable");
  if (arity == 1) return Int(bound);
  // generators sorted by last exponent so each slice extends the previous
  std::vector<const Monomial*> by_last;
  by_last.reserve(gens.size());
  for (const auto& g : gens) by_last.push_back(&g);
  std::sort(by_last.begin(), by_last.end(),
            [last](const Monomial* a, const Monomial* b) {
              return (*a)[last] < (*b)[last];
            });
  Int total(0);
  Int cached(0);
  std::vector<Monomial> antichain;
  std::size_t next = 0;
  for (std::uint32_t k = 0; k < bound; ++k) {
    bool changed = (k == 0);
    while (next < by_last.size() && (*by_last[next])[last] <= k) {
      const Monomial& g = *by_last[next];
      ++next;
      Monomial proj{std::vector<std::uint32_t>(g.exponents().begin(),
                                               g.exponents().end() - 1)};
      bool redundant = false;
      for (const auto& a : antichain)
        if (a.divides(proj)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      std::erase_if(antichain,
                    [&](const Monomial& a) { return proj.divides(a); });
      antichain.push_back(std::move(proj));
      changed = true;
    }
    if (changed) cached = staircase_count(arity - 1, antichain);
    total += cached;
  }
  return total;
}

}  // namespace

Int monomial_colength(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary())
    throw infinite_colength_error(
        "monomial_colength: ideal is not m-primary (some variable has no "
        "pure power among the generators)");
  return staircase_count(ideal.arity(), ideal.generators());
}

Int ordinary_power_colength(const MonomialIdeal& ideal, unsigned n) {
  if (n < 1) throw std::invalid_argument("ordinary_power_colength: n < 1");
  if (!ideal.is_m_primary())
    throw infinite_colength_error(
        "ordinary_power_colength: ideal is not m-primary");
  const auto& gens = ideal.generators();
  // all degree-n products of generators, counted with multiplicity
  std::vector<Monomial> powers;
  std::vector<std::uint32_t> acc(ideal.arity(), 0);
  auto rec = [&](auto&& self, std::size_t from, unsigned left) -> void {
    if (left == 0) {
      powers.emplace_back(acc);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += gens[i][v];
      self(self, i, left - 1);
      for (std::size_t v = 0; v < acc.size(); ++v) acc[v] -= gens[i][v];
    }
  };
  rec(rec, 0, n);
  return monomial_colength(
      MonomialIdeal::from_generators(ideal.arity(), std::move(powers)));
}

}  // namespace hk
