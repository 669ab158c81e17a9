#include "tracecat/symfunc.hpp"

#include "tracecat/errors.hpp"
#include "memo.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracecat {
namespace {

using detail::Memo;

void accumulate(Expansion& into, const Partition& mu, const Rational& c) {
  if (tracecat::is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(mu, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (tracecat::is_zero(it->second)) into.erase(it);
  }
}

// Product in a multiplicative basis: basis elements multiply by merging
// their index partitions.
Expansion merge_product(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accumulate(out, ma.merged(mb), ca * cb);
  return out;
}

const Expansion& unit_expansion() {
  static const Expansion one{{Partition{}, Rational(1)}};
  return one;
}

// --- multiplicative generators -------------------------------------------

Memo<int, SymFn> elementary_memo;
Memo<int, SymFn> power_memo;

SymFn elementary_impl(int k) {
  // e_k = sum_{a=1}^{k} (-1)^{a+1} h_a e_{k-a}
  if (k == 0) return SymFn::constant(1);
  SymFn out;
  for (int a = 1; a <= k; ++a) {
    SymFn term = SymFn::h(a) * elementary(k - a);
    if (a % 2 == 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

SymFn power_impl(int k) {
  // Newton: p_k = k h_k - sum_{i=1}^{k-1} h_{k-i} p_i
  SymFn out = SymFn::h(k) * Rational(k);
  for (int i = 1; i < k; ++i) out -= SymFn::h(k - i) * power_sum(i);
  return out;
}

// h_k written in the e basis (same recursion with the roles exchanged).
Memo<int, Expansion> h_in_e_memo;
const Expansion& h_in_e(int k) {
  return h_in_e_memo.get(k, [k] {
    if (k == 0) return unit_expansion();
    Expansion out;
    for (int a = 1; a <= k; ++a) {
      Expansion ea{{Partition{a}, Rational(a % 2 ? 1 : -1)}};
      for (const auto& [mu, c] : merge_product(ea, h_in_e(k - a))) accumulate(out, mu, c);
    }
    return out;
  });
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// z_lambda = prod_i i^{m_i} m_i!
mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (const auto& [part, m] : mult) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

// h_k = sum_{lambda |- k} p_lambda / z_lambda
Memo<int, Expansion> h_in_p_memo;
const Expansion& h_in_p(int k) {
  return h_in_p_memo.get(k, [k] {
    Expansion out;
    for (const auto& lambda : partitions_of(k))
      accumulate(out, lambda, Rational(mpz_class(1), z_lambda(lambda)));
    return out;
  });
}

SymFn from_multiplicative(const Expansion& expansion, const std::function<SymFn(int)>& gen) {
  SymFn out;
  for (const auto& [mu, c] : expansion) {
    SymFn term = SymFn::constant(c);
    for (int part : mu.parts()) term = term * gen(part);
    out += term;
  }
  return out;
}

Expansion to_multiplicative(const SymFn& f, const std::function<const Expansion&(int)>& h_image) {
  Expansion out;
  for (const auto& [mu, c] : f.terms()) {
    Expansion term{{Partition{}, c}};
    for (int part : mu.parts()) term = merge_product(term, h_image(part));
    for (const auto& [nu, d] : term) accumulate(out, nu, d);
  }
  return out;
}

// --- monomial basis -------------------------------------------------------

Memo<std::pair<std::vector<int>, std::vector<int>>, mpz_class> table_memo;

// Rows are consumed one at a time; the count is invariant under permuting
// columns, so the remaining column sums are kept sorted.
mpz_class count_tables(std::vector<int> rows, std::vector<int> cols) {
  std::sort(cols.begin(), cols.end(), std::greater<>());
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  if (rows.empty()) return cols.empty() ? 1 : 0;
  return table_memo.get({rows, cols}, [&] {
    const int first = rows.front();
    std::vector<int> rest(rows.begin() + 1, rows.end());
    mpz_class total = 0;
    std::vector<int> remaining = cols;
    std::function<void(std::size_t, int)> distribute = [&](std::size_t col, int left) {
      if (col == remaining.size()) {
        if (left == 0) total += count_tables(rest, remaining);
        return;
      }
      const int original = remaining[col];
      for (int take = std::min(left, original); take >= 0; --take) {
        remaining[col] = original - take;
        distribute(col + 1, left - take);
      }
      remaining[col] = original;
    };
    distribute(0, first);
    return total;
  });
}

struct TransitionInverse {
  std::vector<Partition> index;
  // inverse[nu][mu]: coefficient of h_mu in m_nu
  std::vector<std::vector<Rational>> inverse;
};

// Inverts the (h -> m) transition matrix in degree d by exact Gauss-Jordan.
Memo<int, TransitionInverse> m_inverse_memo;
const TransitionInverse& m_to_h_matrix(int d) {
  return m_inverse_memo.get(d, [d] {
    TransitionInverse t;
    t.index = partitions_of(d);
    const std::size_t size = t.index.size();
    // a[nu][mu] = coefficient of m_nu in h_mu; solve a * x = I.
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(2 * size));
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c)
        a[r][c] = Rational(count_contingency_tables(t.index[c], t.index[r]));
      a[r][size + r] = 1;
    }
    for (std::size_t col = 0; col < size; ++col) {
      std::size_t pivot = col;
      while (pivot < size && tracecat::is_zero(a[pivot][col])) ++pivot;
      if (pivot == size) throw std::logic_error("h->m transition matrix is singular");
      std::swap(a[pivot], a[col]);
      const Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (std::size_t r = 0; r < size; ++r) {
        if (r == col || tracecat::is_zero(a[r][col])) continue;
        const Rational factor = a[r][col];
        for (std::size_t c = 0; c < 2 * size; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    // Column mu of h->m inverse gives h-coordinates of m_mu.
    t.inverse.assign(size, std::vector<Rational>(size));
    for (std::size_t nu = 0; nu < size; ++nu)
      for (std::size_t mu = 0; mu < size; ++mu) t.inverse[nu][mu] = a[mu][size + nu];
    return t;
  });
}

Expansion h_to_m(const SymFn& f) {
  Expansion out;
  for (const auto& [mu, c] : f.terms())
    for (const auto& nu : partitions_of(mu.size()))
      accumulate(out, nu, c * Rational(count_contingency_tables(mu, nu)));
  return out;
}

SymFn m_to_h(const Expansion& expansion) {
  SymFn out;
  for (const auto& [nu, c] : expansion) out += c * monomial_symmetric(nu);
  return out;
}

// --- Schur basis ----------------------------------------------------------

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded along rows
// with memoization on the set of used columns.
SymFn jacobi_trudi(const Partition& lambda) {
  const int len = lambda.length();
  if (len == 0) return SymFn::constant(1);
  std::map<unsigned, SymFn> memo;
  std::function<SymFn(int, unsigned)> minor = [&](int row, unsigned used) -> SymFn {
    if (row == len) return SymFn::constant(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    SymFn total;
    int sign_position = 0;
    for (int col = 0; col < len; ++col) {
      if (used & (1u << col)) continue;
      const int idx = lambda[row] - row + col;
      if (idx >= 0) {
        SymFn term = SymFn::h(idx) * minor(row + 1, used | (1u << col));
        if (sign_position % 2) term *= Rational(-1);
        total += term;
      }
      ++sign_position;
    }
    memo.emplace(used, total);
    return total;
  };
  return minor(0, 0u);
}

Memo<Partition, SymFn> schur_memo;
Memo<Partition, Expansion> schur_m_memo;

const Expansion& schur_in_m(const Partition& lambda) {
  return schur_m_memo.get(lambda, [&] { return h_to_m(schur(lambda)); });
}

// s_lambda = m_lambda + (terms lexicographically smaller), so peeling the
// lexicographically largest partition of each size is a triangular solve.
Expansion m_to_schur(Expansion m) {
  Expansion out;
  while (!m.empty()) {
    const auto [lambda, c] = *m.begin();
    accumulate(out, lambda, c);
    for (const auto& [nu, k] : schur_in_m(lambda)) accumulate(m, nu, -c * k);
  }
  return out;
}

}  // namespace

// --- SymFn ------------------------------------------------------------------

SymFn::SymFn(Expansion h_terms) {
  for (auto& [mu, c] : h_terms) accumulate(terms_, mu, c);
}

SymFn SymFn::constant(const Rational& c) {
  SymFn f;
  accumulate(f.terms_, Partition{}, c);
  return f;
}

SymFn SymFn::h(int r) {
  if (r < 0) return {};
  if (r == 0) return constant(1);
  return h(Partition{r});
}

SymFn SymFn::h(const Partition& mu) {
  SymFn f;
  f.terms_.emplace(mu, Rational(1));
  return f;
}

std::optional<int> SymFn::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  for (const auto& [mu, c] : terms_)
    if (mu.size() != d) return std::nullopt;
  return 2 * d;
}

int SymFn::max_degree() const {
  return terms_.empty() ? 0 : 2 * terms_.rbegin()->first.size();
}

Rational SymFn::constant_term() const {
  auto it = terms_.find(Partition{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFn::add_term(const Partition& mu, const Rational& c) { accumulate(terms_, mu, c); }

SymFn& SymFn::operator+=(const SymFn& o) {
  for (const auto& [mu, c] : o.terms_) accumulate(terms_, mu, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
  for (const auto& [mu, c] : o.terms_) accumulate(terms_, mu, -c);
  return *this;
}

SymFn& SymFn::operator*=(const Rational& c) {
  if (tracecat::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

SymFn operator*(const SymFn& a, const SymFn& b) {
  SymFn out;
  out.terms_ = merge_product(a.terms_, b.terms_);
  return out;
}

// --- bases ------------------------------------------------------------------

Basis parse_basis(std::string_view tag) {
  if (tag == "e") return Basis::e;
  if (tag == "h") return Basis::h;
  if (tag == "p") return Basis::p;
  if (tag == "m") return Basis::m;
  if (tag == "s" || tag == "schur") return Basis::schur;
  throw ParseError("unknown basis '" + std::string(tag) + "'");
}

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::schur: return "schur";
  }
  return "?";
}

SymFn elementary(int k) {
  if (k < 0) return {};
  return elementary_memo.get(k, [k] { return elementary_impl(k); });
}

SymFn power_sum(int k) {
  if (k < 1) throw std::invalid_argument("power sums are indexed from 1");
  return power_memo.get(k, [k] { return power_impl(k); });
}

SymFn schur(const Partition& lambda) {
  return schur_memo.get(lambda, [&] { return jacobi_trudi(lambda); });
}

SymFn monomial_symmetric(const Partition& lambda) {
  const auto& t = m_to_h_matrix(lambda.size());
  const auto pos = std::find(t.index.begin(), t.index.end(), lambda) - t.index.begin();
  SymFn out;
  for (std::size_t mu = 0; mu < t.index.size(); ++mu) out.add_term(t.index[mu], t.inverse[pos][mu]);
  return out;
}

mpz_class count_contingency_tables(const Partition& rows, const Partition& cols) {
  if (rows.size() != cols.size()) return 0;
  return count_tables(rows.parts(), cols.parts());
}

SymFn sym_from_basis(Basis basis, const Expansion& expansion) {
  switch (basis) {
    case Basis::h: return SymFn(expansion);
    case Basis::e: return from_multiplicative(expansion, elementary);
    case Basis::p: return from_multiplicative(expansion, power_sum);
    case Basis::m: return m_to_h(expansion);
    case Basis::schur: {
      SymFn out;
      for (const auto& [lambda, c] : expansion) out += c * schur(lambda);
      return out;
    }
  }
  throw ParseError("unknown basis");
}

Expansion to_basis(const SymFn& f, Basis basis) {
  switch (basis) {
    case Basis::h: return f.terms();
    case Basis::e: return to_multiplicative(f, h_in_e);
    case Basis::p: return to_multiplicative(f, h_in_p);
    case Basis::m: return h_to_m(f);
    case Basis::schur: return m_to_schur(h_to_m(f));
  }
  throw ParseError("unknown basis");
}

bool grassmannian_convolution_check(int max_k) {
  for (int k = 0; k <= max_k; ++k) {
    SymFn sum;
    for (int a = 0; a <= k; ++a) {
      SymFn term = elementary(a) * SymFn::h(k - a);
      if (a % 2) term *= Rational(-1);
      sum += term;
    }
    if (sum != (k == 0 ? SymFn::constant(1) : SymFn{})) return false;
  }
  return true;
}

// --- Sym_n ------------------------------------------------------------------

namespace {

Memo<std::pair<int, int>, SymFn> reduced_h_memo;

// h_m in Sym_n for m > n: h_m = sum_{a=1}^{n} (-1)^{a+1} e_a h_{m-a}.
const SymFn& reduced_h(int m, int n) {
  return reduced_h_memo.get({m, n}, [m, n] {
    if (m <= n) return SymFn::h(m);
    SymFn out;
    for (int a = 1; a <= n; ++a) {
      SymFn term = elementary(a) * reduced_h(m - a, n);
      if (a % 2 == 0) term *= Rational(-1);
      out += term;
    }
    return out;
  });
}

}  // namespace

SymFn project_to_n(const SymFn& f, int n) {
  if (n < 1) throw DomainError("Sym_n needs n >= 1");
  SymFn out;
  for (const auto& [mu, c] : f.terms()) {
    if (mu.largest() <= n) {
      out.add_term(mu, c);
      continue;
    }
    std::vector<int> kept;
    SymFn term = SymFn::constant(c);
    for (int part : mu.parts()) {
      if (part <= n)
        kept.push_back(part);
      else
        term = term * reduced_h(part, n);
    }
    out += term * SymFn::h(Partition(kept));
  }
  return out;
}

SymN::SymN(int n, const SymFn& value) : n_(n), value_(project_to_n(value, n)) {}

SymN& SymN::operator+=(const SymN& o) {
  if (o.n_ != n_) throw DomainError("Sym_n variable counts differ");
  value_ += o.value_;
  return *this;
}

SymN operator*(const SymN& a, const SymN& b) {
  if (a.n_ != b.n_) throw DomainError("Sym_n variable counts differ");
  return SymN(a.n_, a.value_ * b.value_);
}

}  // namespace tracecat
