#include "tracecat/laurent.hpp"

#include "tracecat/errors.hpp"

#include <stdexcept>

namespace tracecat {

LaurentPolyQ::LaurentPolyQ(const Terms& terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

LaurentPolyQ LaurentPolyQ::monomial(int exponent, const Rational& c) {
  LaurentPolyQ p;
  p.add(exponent, c);
  return p;
}

void LaurentPolyQ::add(int exponent, const Rational& c) {
  if (tracecat::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (tracecat::is_zero(it->second)) terms_.erase(it);
  }
}

Rational LaurentPolyQ::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolyQ::evaluate_at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPolyQ::is_palindromic() const {
  if (terms_.empty()) return true;
  const int lo = terms_.begin()->first;
  const int hi = terms_.rbegin()->first;
  for (const auto& [e, c] : terms_)
    if (coefficient(lo + hi - e) != c) return false;
  return true;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
  LaurentPolyQ out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

LaurentPolyQ LaurentPolyQ::divide_exact(const LaurentPolyQ& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPolyQ remainder = *this;
  LaurentPolyQ quotient;
  const auto [lead_e, lead_c] = *divisor.terms_.rbegin();
  const int low = divisor.terms_.begin()->first;
  while (!remainder.is_zero()) {
    const auto [re, rc] = *remainder.terms_.rbegin();
    if (re - lead_e + low < (terms_.empty() ? 0 : terms_.begin()->first))
      throw std::domain_error("polynomial division is not exact");
    const LaurentPolyQ step = monomial(re - lead_e, rc / lead_c);
    quotient += step;
    remainder += monomial(0, -1) * step * divisor;
  }
  return quotient;
}

std::string LaurentPolyQ::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      out += tracecat::to_string(mag);
      continue;
    }
    if (!unit) out += tracecat::to_string(mag);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPolyQ quantum_integer(int k) {
  LaurentPolyQ out;
  for (int j = 0; j < k; ++j) out += LaurentPolyQ::monomial(2 * j);
  return out;
}

LaurentPolyQ quantum_factorial(int n) {
  if (n < 0) throw DomainError("quantum factorial of a negative integer");
  LaurentPolyQ out = LaurentPolyQ::monomial(0);
  for (int k = 1; k <= n; ++k) out = out * quantum_integer(k);
  return out;
}

LaurentPolyQ gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("gaussian binomial needs 0 <= k <= n");
  return quantum_factorial(n).divide_exact(quantum_factorial(k) * quantum_factorial(n - k));
}

}  // namespace tracecat
