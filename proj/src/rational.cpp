#include "tracecat/rational.hpp"

#include "tracecat/errors.hpp"

#include <cctype>

namespace tracecat {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-n) : n, d);
  r.canonicalize();
  return r;
}

}  // namespace tracecat
