// Brute-force reference implementations used by the tests. Nothing here calls
// into the library beyond its value types.
#pragma once

#include "tracecat/partition.hpp"
#include "tracecat/rational.hpp"
#include "tracecat/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using tracecat::Partition;
using tracecat::Rational;

// Polynomial in a fixed number of variables.
struct Poly {
  int vars = 0;
  std::map<std::vector<int>, Rational> terms;

  explicit Poly(int v = 0) : vars(v) {}
  static Poly constant(int v, const Rational& c) {
    Poly p(v);
    if (c != 0) p.terms[std::vector<int>(v, 0)] = c;
    return p;
  }
  void add(const std::vector<int>& a, const Rational& c) {
    auto& slot = terms[a];
    slot += c;
    if (slot == 0) terms.erase(a);
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [a, c] : o.terms) add(a, c);
    return *this;
  }
  Poly scaled(const Rational& s) const {
    Poly p(vars);
    if (s != 0)
      for (const auto& [a, c] : terms) p.terms[a] = c * s;
    return p;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly p(x.vars);
    for (const auto& [a, c] : x.terms)
      for (const auto& [b, d] : y.terms) {
        std::vector<int> s(a);
        for (int k = 0; k < x.vars; ++k) s[k] += b[k];
        p.add(s, c * d);
      }
    return p;
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

// Calls f on every exponent vector of `vars` entries summing to `degree`.
inline void compositions(int vars, int degree, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(vars, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == vars - 1) {
      a[k] = left;
      f(a);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[k] = x;
      rec(k + 1, left - x);
    }
  };
  if (vars == 0) {
    if (degree == 0) f(a);
    return;
  }
  rec(0, degree);
}

inline Poly complete(int k, int vars) {
  Poly p(vars);
  if (k < 0) return p;
  compositions(vars, k, [&](const std::vector<int>& a) { p.add(a, 1); });
  return p;
}

inline Poly elementary(int k, int vars) {
  Poly p(vars);
  if (k < 0 || k > vars) return p;
  compositions(vars, k, [&](const std::vector<int>& a) {
    for (int x : a)
      if (x > 1) return;
    p.add(a, 1);
  });
  return p;
}

inline Poly power(int k, int vars) {
  if (k == 0) return Poly::constant(vars, vars);
  Poly p(vars);
  for (int i = 0; i < vars; ++i) {
    std::vector<int> a(vars, 0);
    a[i] = k;
    p.add(a, 1);
  }
  return p;
}

// Sum of all distinct permutations of lambda padded to `vars` entries.
inline Poly monomial(const Partition& lambda, int vars) {
  Poly p(vars);
  if (lambda.length() > vars) return p;
  compositions(vars, lambda.size(), [&](const std::vector<int>& a) {
    std::vector<int> s;
    for (int x : a)
      if (x) s.push_back(x);
    std::sort(s.rbegin(), s.rend());
    if (s == lambda.parts()) p.add(a, 1);
  });
  return p;
}

// Schur polynomial by enumerating semistandard tableaux with entries 1..vars.
inline Poly schur_tableaux(const Partition& lambda, int vars) {
  Poly p(vars);
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> a(vars, 0);
      for (const auto& row : t)
        for (int x : row) ++a[x - 1];
      p.add(a, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= vars; ++x) {
      t[r][c] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return p;
}

inline Poly product_of(const Partition& mu, int vars, Poly (*gen)(int, int)) {
  Poly p = Poly::constant(vars, 1);
  for (int part : mu.parts()) p = p * gen(part, vars);
  return p;
}

// A symmetric function evaluated in `vars` variables through its h-terms.
inline Poly evaluate(const tracecat::SymFn& f, int vars) {
  Poly p(vars);
  for (const auto& [mu, c] : f.terms()) p += product_of(mu, vars, complete).scaled(c);
  return p;
}

// Schur expansion of a symmetric polynomial in `vars` variables, peeling off
// the lexicographically largest monomial each time.
inline std::map<Partition, Rational> schur_decompose(Poly p) {
  std::map<Partition, Rational> out;
  while (!p.terms.empty()) {
    const auto& [lead, c] = *p.terms.rbegin();
    std::vector<int> parts;
    for (int x : lead)
      if (x) parts.push_back(x);
    const Partition nu(parts);
    const Rational coeff = c;
    out[nu] += coeff;
    p += schur_tableaux(nu, p.vars).scaled(-coeff);
  }
  return out;
}

// Rank of a rational matrix by Gaussian elimination.
inline int rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int k = r; k < static_cast<int>(m.size()); ++k)
      if (m[k][c] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int k = 0; k < static_cast<int>(m.size()); ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Solves A x = b when the solution is unique; returns false otherwise.
inline bool solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int k = r; k < rows; ++k)
      if (a[k][c] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    const Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || a[k][c] == 0) continue;
      const Rational f = a[k][c];
      for (int j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
      b[k] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int k = r; k < rows; ++k)
    if (b[k] != 0) return false;
  x.assign(cols, 0);
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
  return true;
}

inline std::vector<std::vector<Rational>> to_rows(const std::vector<std::map<Partition, Rational>>& vecs) {
  std::map<Partition, int> index;
  for (const auto& v : vecs)
    for (const auto& [p, c] : v) index.emplace(p, 0);
  int k = 0;
  for (auto& [p, i] : index) i = k++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vecs) {
    std::vector<Rational> row(index.size(), 0);
    for (const auto& [p, c] : v) row[index[p]] = c;
    rows.push_back(row);
  }
  return rows;
}

inline tracecat::SymFn random_symfn(std::mt19937_64& rng, int max_size, int terms) {
  tracecat::SymFn f;
  std::uniform_int_distribution<int> size(0, max_size), coeff(-5, 5);
  for (int t = 0; t < terms; ++t) {
    const auto parts = tracecat::partitions_of(size(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    Rational c(coeff(rng), 1 + static_cast<int>(rng() % 3));
    c.canonicalize();
    f.add_term(parts[pick(rng)], c);
  }
  return f;
}

inline Rational sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace oracle
