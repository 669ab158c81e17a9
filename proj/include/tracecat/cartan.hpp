#pragma once

#include "tracecat/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tracecat {

// An sl_n weight given by its pairings lambda_i = <h_i, lambda>, i = 1..n-1.
struct Weight {
  std::vector<int> values;

  int operator[](int i) const { return values[i - 1]; }  // 1-based node
  std::size_t size() const { return values.size(); }
  std::string to_string() const;  // "[2,-1]"
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Cartan datum of sl_n (nodes 1..n-1) with a choice of scalars t_ij.
class CartanData {
 public:
  explicit CartanData(int n);  // n >= 2

  int n() const { return n_; }
  int nodes() const { return n_ - 1; }
  int cartan(int i, int j) const;
  const Rational& t(int i, int j) const;
  // v_ij = t_ij^{-1} t_ji
  Rational v(int i, int j) const;

  // t_ii stays 1 and t_ij must be nonzero; t_ij = t_ji is required when
  // a_ij = 0.
  void set_t(int i, int j, const Rational& value);

  // t_ij^2 = t_ji^2 = v_ij = 1 for all i != j.
  bool current_gate_ok() const;
  void require_current_gate() const;

  void check_node(int i) const;
  void check_weight(const Weight& w) const;

  Weight raise(const Weight& w, int i) const;  // w + alpha_i
  Weight lower(const Weight& w, int i) const;  // w - alpha_i

 private:
  int n_;
  std::vector<std::vector<Rational>> t_;
};

}  // namespace tracecat
