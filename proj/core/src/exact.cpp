#include "toricreal/exact.hpp"

#include <cctype>
#include <regex>

#include "toricreal/errors.hpp"

namespace toricreal {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::empty: return "Empty";
    case Errc::unbounded: return "Unbounded";
    case Errc::lower_dimensional: return "LowerDimensional";
    case Errc::no_solution: return "NoSolution";
    case Errc::inconsistent_relations: return "InconsistentRelations";
    case Errc::not_complete: return "NotComplete";
    case Errc::invalid_fan: return "InvalidFan";
    case Errc::torsion_class_group: return "TorsionClassGroup";
    case Errc::not_simplicial: return "NotSimplicial";
    case Errc::not_big: return "NotBig";
    case Errc::exhausted_attempts: return "ExhaustedAttempts";
    case Errc::same_chamber: return "SameChamber";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_cartier: return "NotCartier";
    case Errc::not_fano: return "NotFano";
    case Errc::no_such_m: return "NoSuchM";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * a[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = lcm_of_denominators(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    out[i] = scaled.get_num();
  }
  return primitive(std::move(out));
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw std::domain_error("non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  const std::string s(trim(text));
  if (!std::regex_match(s, pattern)) throw ParseError("not an exact rational: '" + s + "'");
  std::string body = s.front() == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("not an exact rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1) throw ParseError("expected an integer: '" + std::string(trim(text)) + "'");
  return q.get_num();
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_rational(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

IntVector parse_integer_list(std::string_view text) {
  IntVector out;
  for (const auto& q : parse_rational_list(text)) {
    if (q.get_den() != 1) throw ParseError("expected integers, got " + to_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

std::string join(std::span<const Rational> v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

std::string join(std::span<const Integer> v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace toricreal
