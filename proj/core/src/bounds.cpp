#include "hk/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hk/volumes.hpp"

namespace hk {

const char* bound_method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::Key: return "Key";
    case BoundMethod::KeyOptimized: return "KeyOptimized";
    case BoundMethod::Hyp2Est: return "Hyp2Est";
    case BoundMethod::BetaHyp: return "BetaHyp";
    case BoundMethod::CaseTable3D: return "CaseTable3D";
    case BoundMethod::CaseTable4D: return "CaseTable4D";
    case BoundMethod::IneqMul: return "IneqMul";
  }
  return "?";
}

std::string BoundReport::to_json_string(int digits) const {
  nlohmann::ordered_json j;
  j["value"] = value.to_string();
  j["decimal"] = value.to_double();
  j["method"] = bound_method_name(method);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) {
    if (v.is_integer() && v.abs() < Rat(Int(1) << 62))
      params[k] = v.numerator().convert_to<long long>();
    else
      params[k] = v.to_string();
  }
  j["parameters"] = params;
  j["anchor"] = anchor;
  (void)digits;
  return j.dump();
}

long long sally_generator_bound(long long e, bool f_rational) {
  if (e < 1) throw std::invalid_argument("sally_generator_bound: e < 1");
  long long r = f_rational ? e - 1 : e - 2;
  return r < 0 ? 0 : r;
}

Rat key_lower_bound(long long e, int d, long long r, const Rat& s) {
  if (e < 1) throw std::invalid_argument("key_lower_bound: e < 1");
  if (d < 1) throw std::invalid_argument("key_lower_bound: d < 1");
  if (s < Rat(1)) throw std::invalid_argument("key_lower_bound: s < 1");
  if (r < 0) r = 0;
  Rat penalty = Rat(r) * (s - Rat(1)).pow(d) /
                Rat(factorial(static_cast<unsigned>(d)));
  return Rat(e) * (box_simplex_volume(d, s) - penalty);
}

Rat key_lower_bound_nonfr_3d(long long e, const Rat& s) {
  if (e < 2) throw std::invalid_argument("key_lower_bound_nonfr_3d: e < 2");
  if (s < Rat(1) || s > Rat(2))
    throw std::domain_error("key_lower_bound_nonfr_3d: s outside [1, 2]");
  return Rat(e) *
         (s.pow(3) / Rat(6) - Rat(e + 1) * (s - Rat(1)).pow(3) / Rat(6));
}

KeyOptimum optimize_key_bound(long long e, int d, long long r,
                              long denominator_limit) {
  if (denominator_limit < 4)
    throw std::invalid_argument("optimize_key_bound: denominator_limit < 4");
  // Enumerate s = 1 + t over the Farey sequence of order denominator_limit
  // on [0, 1]; den(1 + a/b) = b, so the bound on den(s) is the Farey order.
  const long N = denominator_limit;
  KeyOptimum best{Rat(1), key_lower_bound(e, d, r, Rat(1))};
  Rat best_den(1);
  auto consider = [&](long a, long b) {
    Rat s = Rat(1) + Rat(Int(a), Int(b));
    Rat v = key_lower_bound(e, d, r, s);
    Rat den(s.denominator());
    if (v > best.value ||
        (v == best.value &&
         (den < best_den || (den == best_den && s < best.s_star)))) {
      best = {s, v};
      best_den = den;
    }
  };
  // standard next-term Farey iteration from 0/1, 1/N up to 1/1
  long a = 0, b = 1, c = 1, dd = N;
  consider(a, b);
  while (c <= N) {
    consider(c, dd);
    long k = (N + b) / dd;
    long a2 = k * c - a, b2 = k * dd - b;
    a = c;
    b = dd;
    c = a2;
    dd = b2;
  }
  return best;
}

double key_argmax_closed_form_3d(long long e) {
  if (e < 2) throw std::invalid_argument("key_argmax_closed_form_3d: e < 2");
  double ed = static_cast<double>(e);
  double s = (ed + 2.0 + std::sqrt(ed + 2.0)) / (ed + 1.0);
  return ed / 6.0 * s * s;
}

BoundReport hypersurface_weight_bound(long long a, long long b, long long c) {
  if (!(2 <= a && a <= b && b <= c))
    throw std::invalid_argument(
        "hypersurface_weight_bound: need 2 <= a <= b <= c");
  Rat N = Rat(1, a) + Rat(1, b) + Rat(1, c) - Rat(1, 2);
  Rat n = N - Rat(2, c);
  if (n < Rat(0)) n = Rat(0);
  Rat value = Rat(2) - Rat(a * b * c, 12) * (N.pow(3) - n.pow(3));
  BoundReport rep;
  rep.value = value;
  rep.method = BoundMethod::Hyp2Est;
  rep.parameters = {{"a", Rat(a)}, {"b", Rat(b)}, {"c", Rat(c)},
                    {"N", N},      {"n", n}};
  rep.anchor = "2 - (abc/12)(N^3 - n^3), N = 1/a+1/b+1/c-1/2";
  return rep;
}

Rat beta_hypersurface_bound(long long e, int d) {
  if (e < 1) throw std::invalid_argument("beta_hypersurface_bound: e < 1");
  if (d < 1) throw std::invalid_argument("beta_hypersurface_bound: d < 1");
  return beta(d) * Rat(e);
}

namespace {

BoundReport key_case_report(long long e, int d, long long r, const Rat& s,
                            BoundMethod method, const std::string& anchor) {
  BoundReport rep;
  rep.value = key_lower_bound(e, d, r, s);
  rep.method = method;
  rep.parameters = {{"e", Rat(e)}, {"d", Rat(d)}, {"r", Rat(r)}, {"s", s}};
  rep.anchor = anchor;
  return rep;
}

BoundReport ineqmul_report(long long e, int d) {
  BoundReport rep;
  rep.value = Rat(Int(e), factorial(static_cast<unsigned>(d)));
  rep.method = BoundMethod::IneqMul;
  rep.parameters = {{"e", Rat(e)}, {"d", Rat(d)}};
  rep.anchor = "e/d! <= e_HK";
  return rep;
}

}  // namespace

BoundReport classify_3d(long long e, bool f_rational) {
  if (e < 2) throw std::invalid_argument("classify_3d: e < 2");
  if (f_rational) {
    // r = e-1 with the case s of the source table
    if (e == 2)
      return key_case_report(e, 3, e - 1, Rat(2), BoundMethod::CaseTable3D,
                             "f_e(2) = e(6-e)/6");
    if (e == 3)
      return key_case_report(e, 3, e - 1, Rat(7, 4), BoundMethod::CaseTable3D,
                             "f_e(7/4) = e(289-27e)/384");
    if (e <= 12)
      return key_case_report(e, 3, e - 1, Rat(3, 2), BoundMethod::CaseTable3D,
                             "f_e(3/2) = e(25-e)/48");
    BoundReport rep = ineqmul_report(e, 3);
    rep.method = BoundMethod::CaseTable3D;
    return rep;
  }
  // non-F-rational: best of the s-grid with r = e-2, plus the e/3! floor
  BoundReport best;
  bool have = false;
  for (const Rat& s : {Rat(3, 2), Rat(7, 4), Rat(2)}) {
    Rat v = key_lower_bound(e, 3, e - 2, s);
    if (!have || v > best.value) {
      best = key_case_report(e, 3, e - 2, s, BoundMethod::CaseTable3D,
                             "e(s^3/6 - (e+1)(s-1)^3/6), non-F-rational");
      have = true;
    }
  }
  Rat floor_v = Rat(Int(e), factorial(3));
  if (floor_v > best.value) {
    best = ineqmul_report(e, 3);
    best.method = BoundMethod::CaseTable3D;
  }
  return best;
}

BoundReport classify_4d(long long e) {
  if (e < 2) throw std::invalid_argument("classify_4d: e < 2");
  if (e == 2) {
    BoundReport rep =
        key_case_report(e, 4, e - 1, Rat(2), BoundMethod::CaseTable4D,
                        "generic bound at s=2; sharp e=2 value is the "
                        "dimension-4 quadric closed form");
    return rep;
  }
  if (e <= 10)
    return key_case_report(e, 4, e - 1, Rat(2), BoundMethod::CaseTable4D,
                           "e(13-e)/24");
  if (e <= 29)
    return key_case_report(e, 4, e - 1, Rat(3, 2), BoundMethod::CaseTable4D,
                           "e(78-e)/384");
  BoundReport rep = ineqmul_report(e, 4);
  rep.method = BoundMethod::CaseTable4D;
  return rep;
}

Rat quadric_4d_weighted_bound() {
  SlabSpec spec{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 3)}, Rat(2, 3)};
  return Rat(2) - Rat(4) * weighted_slab_volume(spec);
}

Rat a1_chain_bound(long long c) {
  if (c < 3) throw std::domain_error("a1_chain_bound: c < 3");
  return Rat(3, 2) - Rat(2, 3 * c * c);
}

}  // namespace hk
