#include "hk/rat.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hk {

namespace mp = boost::multiprecision;

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mp::cpp_rational(num);
  v_ /= mp::cpp_rational(den);
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long long k) const {
  if (k < 0) {
    if (v_ == 0) throw std::domain_error("Rat: 0 to a negative power");
    Rat inv = Rat(1) / *this;
    return inv.pow(-k);
  }
  Rat base = *this;
  Rat acc = Rat(1);
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Int Rat::floor() const {
  Int n = numerator(), d = denominator();
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int Rat::ceil() const { return -(-*this).floor(); }

std::string Rat::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += "/";
    s += denominator().str();
  }
  return s;
}

Rat Rat::parse(std::string_view text) {
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw std::invalid_argument("Rat::parse: malformed integer '" +
                                  std::string(text) + "'");
    return Rat(Int(std::string(text)));
  }
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = text.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds))
    throw std::invalid_argument("Rat::parse: malformed rational '" +
                                std::string(text) + "'");
  Int den{std::string(ds)};
  if (den == 0)
    throw std::invalid_argument("Rat::parse: zero denominator in '" +
                                std::string(text) + "'");
  return Rat(Int(std::string(ns)), den);
}

std::string Rat::decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("Rat::decimal: digits < 1");
  if (is_zero()) return "0";
  Int n = numerator().sign() < 0 ? Int(-numerator()) : numerator();
  Int d = denominator();
  // Decimal exponent e10: the value is in [10^e10, 10^(e10+1)).
  long long e10 = 0;
  {
    Int lo = n, hi = d;
    while (lo >= hi * 10) {
      hi *= 10;
      ++e10;
    }
    while (lo < hi) {
      lo *= 10;
      --e10;
    }
  }
  // Round |v| * 10^(digits-1-e10) to the nearest integer, half away from 0.
  long long shift = digits - 1 - e10;
  Int num = n, den = d;
  if (shift >= 0)
    num *= mp::pow(Int(10), static_cast<unsigned>(shift));
  else
    den *= mp::pow(Int(10), static_cast<unsigned>(-shift));
  Int q = num / den, r = num % den;
  if (2 * r >= den) ++q;
  std::string digs = q.str();
  if (static_cast<int>(digs.size()) > digits) {
    // rounding carried into a new leading digit (e.g. 999.96 -> 1000.0)
    ++e10;
    digs.pop_back();
  }
  std::string out = numerator().sign() < 0 ? "-" : "";
  if (e10 >= -4 && e10 <= 15) {
    if (e10 >= digits - 1) {
      out += digs;
      for (long long i = 0; i < e10 - (digits - 1); ++i) out += '0';
    } else if (e10 >= 0) {
      out += digs.substr(0, static_cast<std::size_t>(e10) + 1);
      out += '.';
      out += digs.substr(static_cast<std::size_t>(e10) + 1);
    } else {
      out += "0.";
      for (long long i = 0; i < -e10 - 1; ++i) out += '0';
      out += digs;
    }
  } else {
    out += digs.substr(0, 1);
    if (digits > 1) {
      out += '.';
      out += digs.substr(1);
    }
    out += 'e';
    out += (e10 < 0 ? "-" : "+");
    out += std::to_string(e10 < 0 ? -e10 : e10);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.to_string();
}

Int binom(unsigned long long n, unsigned long long k) {
  if (k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int acc(1);
  for (unsigned long long i = 1; i <= k; ++i) {
    acc *= Int(n - k + i);
    acc /= Int(i);
  }
  return acc;
}

Int factorial(unsigned n) {
  Int acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace hk
