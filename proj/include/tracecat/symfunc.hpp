#pragma once

#include "tracecat/partition.hpp"
#include "tracecat/rational.hpp"

#include <map>
#include <optional>
#include <string_view>

namespace tracecat {

// Coefficients of a symmetric function in some basis, indexed by partitions.
using Expansion = std::map<Partition, Rational>;

enum class Basis { e, h, p, m, schur };

// Accepts "e", "h", "p", "m", "s"/"schur"; throws ParseError otherwise.
Basis parse_basis(std::string_view tag);
std::string_view basis_name(Basis b);

/// An element of the ring of symmetric functions.
///
/// Stored in the complete homogeneous basis: the key mu stands for
/// h_{mu_1} h_{mu_2} ... . Each h_r has degree 2r. Zero coefficients are never
/// stored, so equality of SymFn values is equality of symmetric functions.
class SymFn {
 public:
  SymFn() = default;
  explicit SymFn(Expansion h_terms);

  static SymFn constant(const Rational& c);
  static SymFn h(int r);
  static SymFn h(const Partition& mu);

  const Expansion& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // 2*|mu| of every term when homogeneous; nullopt for zero or mixed degree.
  std::optional<int> degree() const;
  // Largest 2*|mu| over all terms (0 for zero).
  int max_degree() const;
  // Coefficient of the constant term h_().
  Rational constant_term() const;

  void add_term(const Partition& mu, const Rational& c);

  SymFn& operator+=(const SymFn& o);
  SymFn& operator-=(const SymFn& o);
  SymFn& operator*=(const Rational& c);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator-(SymFn a) { return a *= Rational(-1); }
  friend SymFn operator*(SymFn a, const Rational& c) { return a *= c; }
  friend SymFn operator*(const Rational& c, SymFn a) { return a *= c; }
  friend SymFn operator*(const SymFn& a, const SymFn& b);
  friend bool operator==(const SymFn& a, const SymFn& b) = default;

 private:
  Expansion terms_;
};

SymFn elementary(int k);
SymFn power_sum(int k);
SymFn schur(const Partition& lambda);
SymFn monomial_symmetric(const Partition& lambda);

// Canonical h-basis representative of an expansion in `basis`.
SymFn sym_from_basis(Basis basis, const Expansion& expansion);
// Exact expansion of f in `basis`; inverse of sym_from_basis.
Expansion to_basis(const SymFn& f, Basis basis);

// Number of nonnegative integer matrices with row sums `rows` and column sums
// `cols`: the coefficient of m_cols in h_rows.
mpz_class count_contingency_tables(const Partition& rows, const Partition& cols);

// Checks sum_{a+b=k} (-1)^a e_a h_b = delta_{k,0} for 0 <= k <= max_k.
bool grassmannian_convolution_check(int max_k);

/// Sym_n, the quotient of Sym by e_s (s > n).
///
/// Values are kept in the canonical basis {h_mu : mu_1 <= n}, in which
/// h_1, ..., h_n are algebraically independent.
class SymN {
 public:
  SymN(int n, const SymFn& value);  // projects `value`
  static SymN zero(int n) { return SymN(n, SymFn{}); }
  static SymN one(int n) { return SymN(n, SymFn::constant(1)); }

  int n() const { return n_; }
  const SymFn& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  SymN& operator+=(const SymN& o);
  friend SymN operator+(SymN a, const SymN& b) { return a += b; }
  friend SymN operator*(const SymN& a, const SymN& b);
  friend bool operator==(const SymN& a, const SymN& b) = default;

 private:
  int n_;
  SymFn value_;
};

// Image of f in Sym_n in the canonical basis. Idempotent ring map.
SymFn project_to_n(const SymFn& f, int n);

}  // namespace tracecat
