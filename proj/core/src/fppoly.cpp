#include "hk/fppoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hk {

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

FpPoly FpPoly::from_terms(std::uint32_t p, std::size_t arity,
                          std::vector<Term> terms) {
  if (p < 2) throw std::invalid_argument("FpPoly: characteristic < 2");
  std::map<Monomial, std::uint64_t> acc;
  for (auto& [m, c] : terms) {
    if (m.arity() != arity)
      throw std::invalid_argument("FpPoly: monomial arity mismatch");
    acc[m] = (acc[m] + c) % p;
  }
  FpPoly f(p, arity);
  for (auto& [m, c] : acc)
    if (c % p != 0) f.terms_.emplace_back(m, static_cast<std::uint32_t>(c % p));
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) {
              return degrevlex_greater(a.first, b.first);
            });
  return f;
}

std::uint64_t FpPoly::min_degree() const {
  std::uint64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.degree() < d) d = m.degree();
    first = false;
  }
  return d;
}

std::uint64_t FpPoly::max_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

bool FpPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.first.degree() == d; });
}

bool FpPoly::uses_variable(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [i](const Term& t) { return t.first[i] > 0; });
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<Term> all = terms_;
  for (const auto& [m, c] : o.terms_) all.emplace_back(m, p_ - c);
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<Term> all;
  c %= p_;
  for (const auto& [m, v] : terms_)
    all.emplace_back(m, static_cast<std::uint32_t>(std::uint64_t(v) * c % p_));
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::times_term(const Monomial& m, std::uint32_t c) const {
  std::vector<Term> all;
  c %= p_;
  for (const auto& [mm, v] : terms_)
    all.emplace_back(mm * m,
                     static_cast<std::uint32_t>(std::uint64_t(v) * c % p_));
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      all.emplace_back(m1 * m2, static_cast<std::uint32_t>(
                                    std::uint64_t(c1) * c2 % p_));
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::mul_truncated(const FpPoly& o, std::uint64_t q) const {
  std::vector<Term> all;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1 * m2;
      bool drop = false;
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (m[i] >= q) {
          drop = true;
          break;
        }
      if (!drop)
        all.emplace_back(std::move(m), static_cast<std::uint32_t>(
                                           std::uint64_t(c1) * c2 % p_));
    }
  return from_terms(p_, arity_, std::move(all));
}

FpPoly FpPoly::pow_truncated(std::uint64_t k, std::uint64_t q) const {
  FpPoly acc = from_terms(
      p_, arity_,
      {{Monomial(std::vector<std::uint32_t>(arity_, 0)), 1}});
  FpPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc.mul_truncated(base, q);
    base = base.mul_truncated(base, q);
    k >>= 1;
  }
  return acc;
}

std::string FpPoly::to_string(
    const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1 || m.is_one()) {
      s += std::to_string(c);
      if (!m.is_one()) s += "*";
    }
    if (!m.is_one()) s += m.to_string(var_names);
  }
  return s;
}

}  // namespace hk
