#include "hk/ringspec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "hk/closedforms.hpp"
#include "hk/errors.hpp"

namespace hk {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  std::string s;  // whitespace already removed
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw spec_parse_error("ring spec: expected '" + std::string(1, c) +
                             "' at position " + std::to_string(i) + " in '" +
                             s + "'");
  }
  std::string ident() {
    if (!is_ident_start(peek()))
      throw spec_parse_error("ring spec: expected identifier at position " +
                             std::to_string(i) + " in '" + s + "'");
    std::size_t start = i;
    while (is_ident_char(peek())) ++i;
    return s.substr(start, i - start);
  }
  unsigned long long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw spec_parse_error("ring spec: expected number at position " +
                             std::to_string(i) + " in '" + s + "'");
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
      if (v > (1ull << 40))
        throw spec_parse_error("ring spec: number too large");
      ++i;
    }
    return v;
  }
};

// factor := ident ('^' nat)? ; term := nat? '*'? factor ('*'? factor)* ;
// poly := '-'? term (('+'|'-') term)*
// Variables not present in `vars` are appended when allow_new_vars.
struct PolyBuilder {
  std::vector<std::string>* vars;
  bool allow_new_vars;
  std::map<std::string, std::size_t> index;

  std::size_t var_index(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (!allow_new_vars)
      throw spec_parse_error("ring spec: unknown variable '" + name + "'");
    vars->push_back(name);
    index[name] = vars->size() - 1;
    return vars->size() - 1;
  }
};

// Parses a polynomial until a delimiter (';' or '}') is reached.
FpPoly parse_poly(Cursor& cur, unsigned long long p, PolyBuilder& builder) {
  struct RawTerm {
    std::map<std::size_t, std::uint32_t> exps;
    long long coeff;
  };
  std::vector<RawTerm> raw;
  bool negative = cur.eat('-');
  if (cur.eat('+')) negative = false;
  while (true) {
    RawTerm term;
    term.coeff = negative ? -1 : 1;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      term.coeff *= static_cast<long long>(cur.number() % p);
      saw_factor = true;
      cur.eat('*');
    }
    while (is_ident_start(cur.peek())) {
      std::string name = cur.ident();
      unsigned long long e = 1;
      if (cur.eat('^')) e = cur.number();
      if (e > 1'000'000)
        throw spec_parse_error("ring spec: exponent too large");
      std::size_t vi = builder.var_index(name);
      term.exps[vi] += static_cast<std::uint32_t>(e);
      saw_factor = true;
      cur.eat('*');
    }
    if (!saw_factor)
      throw spec_parse_error("ring spec: expected a term at position " +
                             std::to_string(cur.i));
    raw.push_back(std::move(term));
    if (cur.eat('+')) {
      negative = false;
    } else if (cur.eat('-')) {
      negative = true;
    } else {
      break;
    }
  }
  std::size_t arity = builder.vars->size();
  std::vector<FpPoly::Term> terms;
  for (const auto& t : raw) {
    std::vector<std::uint32_t> e(arity, 0);
    for (const auto& [vi, ex] : t.exps) e[vi] = ex;
    long long c = t.coeff % static_cast<long long>(p);
    if (c < 0) c += static_cast<long long>(p);
    terms.emplace_back(Monomial(std::move(e)),
                       static_cast<std::uint32_t>(c));
  }
  return FpPoly::from_terms(static_cast<std::uint32_t>(p), arity,
                            std::move(terms));
}

unsigned long long parsed_prime(unsigned long long p) {
  if (p == 2 || !is_prime(p))
    throw bad_characteristic_error(
        "ring spec: p must be an odd prime, got " + std::to_string(p));
  if (p >= (1ull << 15))
    throw spec_parse_error("ring spec: p too large for the engines");
  return p;
}

// key=value fields split on ';'; values end at ';' or '}'.
std::map<std::string, std::string> parse_fields(Cursor& cur) {
  std::map<std::string, std::string> fields;
  cur.expect('{');
  while (!cur.eat('}')) {
    std::string key = cur.ident();
    cur.expect('=');
    std::size_t start = cur.i;
    while (!cur.done() && cur.peek() != ';' && cur.peek() != '}') ++cur.i;
    fields[key] = cur.s.substr(start, cur.i - start);
    cur.eat(';');
  }
  if (!cur.done())
    throw spec_parse_error("ring spec: trailing input after '}'");
  return fields;
}

const std::string& require(const std::map<std::string, std::string>& fields,
                           const std::string& key, const char* kind) {
  auto it = fields.find(key);
  if (it == fields.end())
    throw spec_parse_error(std::string("ring spec: ") + kind +
                           " requires field '" + key + "'");
  return it->second;
}

}  // namespace

int RingSpec::dimension() const {
  switch (kind) {
    case Kind::MonomialQuotient:
      return static_cast<int>(ideal.arity());
    case Kind::QuadricHypersurface:
      return quadric_dim;
    case Kind::GeneralHypersurface:
      return static_cast<int>(f.arity()) - 1;
    case Kind::Scroll:
      return 3;
  }
  return 0;
}

long long RingSpec::hypersurface_multiplicity() const {
  switch (kind) {
    case Kind::QuadricHypersurface:
      return 2;
    case Kind::GeneralHypersurface:
      return static_cast<long long>(f.min_degree());
    default:
      return -1;
  }
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::MonomialQuotient: {
      std::string s = "monomial{p=" + std::to_string(p) + "; vars=";
      for (std::size_t i = 0; i < var_names.size(); ++i)
        s += (i ? "," : "") + var_names[i];
      s += "; gens=";
      const auto& gens = ideal.generators();
      for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + gens[i].to_string(var_names);
      return s + "}";
    }
    case Kind::QuadricHypersurface:
      return "quadric{p=" + std::to_string(p) +
             "; d=" + std::to_string(quadric_dim) +
             "; phi=" + phi.to_string(var_names) + "}";
    case Kind::GeneralHypersurface:
      return "hypersurface{p=" + std::to_string(p) +
             "; f=" + f.to_string(var_names) + "}";
    case Kind::Scroll:
      return "scroll{n=" + std::to_string(scroll_n) + "}";
  }
  return "?";
}

RingSpec parse_ring_spec(std::string_view text) {
  Cursor cur;
  cur.s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cur.s += c;

  RingSpec spec;
  std::string kind = cur.ident();
  auto fields_from = [&]() { return parse_fields(cur); };

  if (kind == "monomial") {
    spec.kind = RingSpec::Kind::MonomialQuotient;
    auto fields = fields_from();
    spec.p = parsed_prime(Cursor{require(fields, "p", "monomial")}.number());
    {
      Cursor vc{require(fields, "vars", "monomial")};
      while (true) {
        std::string name = vc.ident();
        if (std::find(spec.var_names.begin(), spec.var_names.end(), name) !=
            spec.var_names.end())
          throw spec_parse_error("ring spec: duplicate variable '" + name +
                                 "'");
        spec.var_names.push_back(name);
        if (!vc.eat(',')) break;
      }
      if (!vc.done()) throw spec_parse_error("ring spec: bad vars list");
    }
    PolyBuilder builder{&spec.var_names, false, {}};
    for (std::size_t i = 0; i < spec.var_names.size(); ++i)
      builder.index[spec.var_names[i]] = i;
    std::vector<Monomial> gens;
    {
      Cursor gc{require(fields, "gens", "monomial")};
      while (true) {
        std::vector<std::uint32_t> exps(spec.var_names.size(), 0);
        bool saw = false;
        while (is_ident_start(gc.peek())) {
          std::string name = gc.ident();
          unsigned long long e = 1;
          if (gc.eat('^')) e = gc.number();
          exps[builder.var_index(name)] += static_cast<std::uint32_t>(e);
          saw = true;
          gc.eat('*');
        }
        if (!saw)
          throw spec_parse_error("ring spec: expected monomial generator");
        gens.emplace_back(std::move(exps));
        if (!gc.eat(',')) break;
      }
      if (!gc.done()) throw spec_parse_error("ring spec: bad gens list");
    }
    spec.ideal =
        MonomialIdeal::from_generators(spec.var_names.size(), std::move(gens));
    return spec;
  }

  if (kind == "quadric") {
    spec.kind = RingSpec::Kind::QuadricHypersurface;
    auto fields = fields_from();
    spec.p = parsed_prime(Cursor{require(fields, "p", "quadric")}.number());
    spec.quadric_dim =
        static_cast<int>(Cursor{require(fields, "d", "quadric")}.number());
    if (spec.quadric_dim < 1 || spec.quadric_dim > 7)
      throw spec_parse_error("ring spec: quadric d must be in 1..7");
    static const char* kPhiVars[] = {"y", "z", "w", "u", "v", "t", "s"};
    std::vector<std::string> phi_vars(
        kPhiVars, kPhiVars + spec.quadric_dim);
    spec.var_names = phi_vars;
    PolyBuilder builder{&spec.var_names, false, {}};
    for (std::size_t i = 0; i < spec.var_names.size(); ++i)
      builder.index[spec.var_names[i]] = i;
    Cursor pc{require(fields, "phi", "quadric")};
    spec.phi = parse_poly(pc, spec.p, builder);
    if (!pc.done()) throw spec_parse_error("ring spec: trailing phi input");
    if (!spec.phi.is_zero() && spec.phi.min_degree() < 2)
      throw spec_parse_error("ring spec: phi must lie in m^2");
    return spec;
  }

  if (kind == "hypersurface") {
    spec.kind = RingSpec::Kind::GeneralHypersurface;
    auto fields = fields_from();
    spec.p =
        parsed_prime(Cursor{require(fields, "p", "hypersurface")}.number());
    PolyBuilder builder{&spec.var_names, true, {}};
    Cursor pc{require(fields, "f", "hypersurface")};
    spec.f = parse_poly(pc, spec.p, builder);
    if (!pc.done()) throw spec_parse_error("ring spec: trailing f input");
    if (spec.f.is_zero() || spec.var_names.empty())
      throw spec_parse_error("ring spec: f must involve variables");
    if (spec.f.min_degree() < 1)
      throw spec_parse_error("ring spec: f must vanish at the origin");
    return spec;
  }

  if (kind == "scroll") {
    spec.kind = RingSpec::Kind::Scroll;
    auto fields = fields_from();
    spec.scroll_n =
        static_cast<long long>(Cursor{require(fields, "n", "scroll")}.number());
    return spec;
  }

  throw spec_parse_error("ring spec: unknown kind '" + kind + "'");
}

}  // namespace hk
