#pragma once

#include "tracecat/rational.hpp"

#include <map>
#include <string>

namespace tracecat {

// Laurent polynomial in q with rational coefficients.
class LaurentPolyQ {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPolyQ() = default;
  explicit LaurentPolyQ(const Terms& terms);
  static LaurentPolyQ monomial(int exponent, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  Rational evaluate_at_one() const;
  bool is_palindromic() const;

  LaurentPolyQ& operator+=(const LaurentPolyQ& o);
  friend LaurentPolyQ operator+(LaurentPolyQ a, const LaurentPolyQ& b) { return a += b; }
  friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
  friend bool operator==(const LaurentPolyQ& a, const LaurentPolyQ& b) = default;

  // Exact quotient; throws std::domain_error if `divisor` does not divide.
  LaurentPolyQ divide_exact(const LaurentPolyQ& divisor) const;

  // e.g. "1 + q^2 + 2q^4"
  std::string to_string() const;

 private:
  void add(int exponent, const Rational& c);
  Terms terms_;
};

// (k)_{q^2} = 1 + q^2 + ... + q^{2(k-1)}
LaurentPolyQ quantum_integer(int k);
// (n)!_{q^2} = (n)_{q^2} (n-1)_{q^2} ... (1)_{q^2}
LaurentPolyQ quantum_factorial(int n);
// (n)!_{q^2} / ((k)!_{q^2} (n-k)!_{q^2}); throws DomainError unless 0 <= k <= n.
LaurentPolyQ gaussian_binomial(int n, int k);

}  // namespace tracecat
