#pragma once

#include "tracecat/partition.hpp"
#include "tracecat/rational.hpp"
#include "tracecat/symfunc.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tracecat::nh {

using Exponent = std::vector<int>;

// Polynomial in x_1..x_n with rational coefficients.
class PolyN {
 public:
  explicit PolyN(int n);
  static PolyN monomial(int n, const Exponent& a, const Rational& c = 1);
  static PolyN constant(int n, const Rational& c);

  int n() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& a, const Rational& c);
  PolyN& operator+=(const PolyN& o);
  PolyN& operator-=(const PolyN& o);
  PolyN& operator*=(const Rational& c);
  friend PolyN operator*(const PolyN& a, const PolyN& b);
  friend bool operator==(const PolyN& a, const PolyN& b) = default;

  // x_i * f (1-based i)
  PolyN times_variable(int i) const;
  // f with x_i and x_{i+1} exchanged (1-based i)
  PolyN swapped(int i) const;

 private:
  int n_;
  std::map<Exponent, Rational> terms_;
};

// A generator of NH_n: Dot(i) is x_i (1 <= i <= n), Crossing(i) is the
// divided difference d_i (1 <= i < n).
struct Letter {
  enum class Kind { Dot, Crossing };
  Kind kind;
  int index;

  static Letter dot(int i) { return {Kind::Dot, i}; }
  static Letter crossing(int i) { return {Kind::Crossing, i}; }
  int degree() const { return kind == Kind::Dot ? 2 : -2; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Letters compose as operators: the word (a, b, c) acts as a∘b∘c, so c is
// applied first.
using Word = std::vector<Letter>;

int word_degree(const Word& w);

/// A rational linear combination of words in NH_n.
///
/// Words are never rewritten; two elements are compared through their action
/// on the polynomial representation (see equals()).
class NHElement {
 public:
  explicit NHElement(int n);
  static NHElement identity(int n);
  static NHElement word(int n, Word w, const Rational& c = 1);

  int n() const { return n_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree if homogeneous (x_i: +2, d_i: -2); nullopt otherwise.
  std::optional<int> degree() const;

  void add_term(const Word& w, const Rational& c);
  NHElement& operator+=(const NHElement& o);
  NHElement& operator-=(const NHElement& o);
  friend NHElement operator+(NHElement a, const NHElement& b) { return a += b; }
  friend NHElement operator-(NHElement a, const NHElement& b) { return a -= b; }
  friend NHElement operator*(const Rational& c, const NHElement& e);
  // Composition: (a*b)(f) = a(b(f)).
  friend NHElement operator*(const NHElement& a, const NHElement& b);

 private:
  void check_letter(const Letter& l) const;
  int n_;
  std::map<Word, Rational> terms_;
};

// Divided difference (f - s_i f)/(x_i - x_{i+1}). The division is carried out
// by long division and throws std::logic_error on a nonzero remainder.
PolyN divided_difference(const PolyN& f, int i);

PolyN act(const NHElement& e, const PolyN& p);

// Monomials x^a with a_k <= n-k (1-based k), sorted lexicographically; a free
// basis of Q[x_1..x_n] over Sym_n.
std::vector<Exponent> staircase_basis(int n);

// Coordinates of p in the staircase basis, with coefficients in Sym_n.
std::map<Exponent, SymN> staircase_expand(const PolyN& p);

class NHMatrix {
 public:
  NHMatrix(int n, std::vector<std::vector<SymN>> entries);
  static NHMatrix identity(int n);

  int n() const { return n_; }
  const std::vector<Exponent>& basis() const { return basis_; }
  const std::vector<std::vector<SymN>>& entries() const { return entries_; }
  const SymN& at(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  SymN trace() const;

  friend NHMatrix operator*(const NHMatrix& a, const NHMatrix& b);
  friend bool operator==(const NHMatrix& a, const NHMatrix& b);

 private:
  int n_;
  std::vector<Exponent> basis_;
  std::vector<std::vector<SymN>> entries_;
};

// Column a is the staircase expansion of e(x^a).
NHMatrix to_matrix(const NHElement& e);

// Class of e in Tr(NH_n) = Sym_n: the trace of its matrix.
SymN trace_class(const NHElement& e);

// Equal iff the two elements act identically on every staircase monomial.
bool equals(const NHElement& a, const NHElement& b);

// e_n = x^delta d_{w0}, delta = (n-1, ..., 1, 0), with w0 written as
// (1)(2 1)(3 2 1)...
NHElement idempotent_e(int n);

// Trace class of x^lambda e_n; throws DomainError if lambda has more than n
// parts.
SymN standard_basis_class(int n, const Partition& lambda);

struct RelationCheck {
  std::string family;
  std::string instance;
  bool passed;
};

// Every instance of the nilHecke relations for NH_n, checked by action.
std::vector<RelationCheck> verify_relations(int n);

std::string to_text(const NHElement& e);

}  // namespace tracecat::nh
