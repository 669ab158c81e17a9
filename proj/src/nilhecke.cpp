#include "tracecat/nilhecke.hpp"

#include "tracecat/errors.hpp"
#include "memo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tracecat::nh {
namespace {

template <class Map, class Key>
void accumulate(Map& into, const Key& key, const Rational& c) {
  if (tracecat::is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(key, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (tracecat::is_zero(it->second)) into.erase(it);
  }
}

void check_same_n(int a, int b) {
  if (a != b)
    throw DomainError("strand count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// --- PolyN ------------------------------------------------------------------

PolyN::PolyN(int n) : n_(n) {
  if (n < 1) throw DomainError("polynomial ring needs at least one variable");
}

PolyN PolyN::monomial(int n, const Exponent& a, const Rational& c) {
  PolyN p(n);
  if (static_cast<int>(a.size()) != n) throw DomainError("exponent vector has wrong length");
  p.add_term(a, c);
  return p;
}

PolyN PolyN::constant(int n, const Rational& c) { return monomial(n, Exponent(n, 0), c); }

void PolyN::add_term(const Exponent& a, const Rational& c) { accumulate(terms_, a, c); }

PolyN& PolyN::operator+=(const PolyN& o) {
  check_same_n(n_, o.n_);
  for (const auto& [a, c] : o.terms_) accumulate(terms_, a, c);
  return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
  check_same_n(n_, o.n_);
  for (const auto& [a, c] : o.terms_) accumulate(terms_, a, -c);
  return *this;
}

PolyN& PolyN::operator*=(const Rational& c) {
  if (tracecat::is_zero(c)) terms_.clear();
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
  check_same_n(a.n_, b.n_);
  PolyN out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      accumulate(out.terms_, e, ca * cb);
    }
  return out;
}

PolyN PolyN::times_variable(int i) const {
  PolyN out(n_);
  for (const auto& [a, c] : terms_) {
    Exponent e(a);
    ++e[i - 1];
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

PolyN PolyN::swapped(int i) const {
  PolyN out(n_);
  for (const auto& [a, c] : terms_) {
    Exponent e(a);
    std::swap(e[i - 1], e[i]);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

PolyN divided_difference(const PolyN& f, int i) {
  PolyN numerator = f;
  numerator -= f.swapped(i);
  std::map<Exponent, Rational> rest = numerator.terms();
  PolyN quotient(f.n());
  const std::size_t xi = i - 1, xj = i;
  // Long division by (x_i - x_{i+1}), always eliminating a term of highest
  // x_i-degree.
  while (!rest.empty()) {
    auto top = std::max_element(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
      return a.first[xi] < b.first[xi];
    });
    if (top->first[xi] == 0)
      throw std::logic_error("divided difference left a nonzero remainder");
    Exponent q = top->first;
    const Rational c = top->second;
    --q[xi];
    quotient.add_term(q, c);
    rest.erase(top);
    Exponent shifted = q;
    ++shifted[xj];
    accumulate(rest, shifted, c);
  }
  return quotient;
}

// --- words and elements -----------------------------------------------------

int word_degree(const Word& w) {
  return std::accumulate(w.begin(), w.end(), 0,
                         [](int d, const Letter& l) { return d + l.degree(); });
}

NHElement::NHElement(int n) : n_(n) {
  if (n < 1) throw DomainError("NH_n needs n >= 1");
}

NHElement NHElement::identity(int n) { return word(n, {}); }

NHElement NHElement::word(int n, Word w, const Rational& c) {
  NHElement e(n);
  e.add_term(w, c);
  return e;
}

void NHElement::check_letter(const Letter& l) const {
  const int hi = l.kind == Letter::Kind::Dot ? n_ : n_ - 1;
  if (l.index < 1 || l.index > hi)
    throw DomainError(std::string(l.kind == Letter::Kind::Dot ? "x" : "d") +
                      std::to_string(l.index) + " is out of range for n=" + std::to_string(n_));
}

std::optional<int> NHElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = word_degree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d) return std::nullopt;
  return d;
}

void NHElement::add_term(const Word& w, const Rational& c) {
  for (const auto& l : w) check_letter(l);
  accumulate(terms_, w, c);
}

NHElement& NHElement::operator+=(const NHElement& o) {
  check_same_n(n_, o.n_);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) {
  check_same_n(n_, o.n_);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

NHElement operator*(const Rational& c, const NHElement& e) {
  NHElement out(e.n_);
  for (const auto& [w, x] : e.terms_) accumulate(out.terms_, w, c * x);
  return out;
}

NHElement operator*(const NHElement& a, const NHElement& b) {
  check_same_n(a.n_, b.n_);
  NHElement out(a.n_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(out.terms_, w, ca * cb);
    }
  return out;
}

PolyN act(const NHElement& e, const PolyN& p) {
  check_same_n(e.n(), p.n());
  PolyN out(p.n());
  for (const auto& [w, c] : e.terms()) {
    PolyN f = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      f = it->kind == Letter::Kind::Dot ? f.times_variable(it->index)
                                        : divided_difference(f, it->index);
    f *= c;
    out += f;
  }
  return out;
}

// --- staircase expansion ----------------------------------------------------

std::vector<Exponent> staircase_basis(int n) {
  std::vector<Exponent> out;
  Exponent a(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= n - 1 - k; ++v) {
      a[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;  // generated in lexicographic order
}

namespace {

// Sym_n coefficients are carried as polynomials in e_1..e_n (keys are
// partitions naming products of elementary symmetric functions).
using EPoly = Expansion;
using StairExpansion = std::map<Exponent, EPoly>;

void add_scaled(StairExpansion& into, const StairExpansion& from, const EPoly& factor) {
  for (const auto& [b, coeffs] : from) {
    EPoly& slot = into[b];
    for (const auto& [mu, c] : coeffs)
      for (const auto& [nu, d] : factor) accumulate(slot, mu.merged(nu), c * d);
    if (slot.empty()) into.erase(b);
  }
}

// Exponent vectors of total degree `degree` in the first `vars` variables.
void compositions(int vars, int degree, Exponent& current, std::size_t pos,
                  std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(vars)) {
    current[pos] = degree;
    out.push_back(current);
    current[pos] = 0;
    return;
  }
  for (int v = degree; v >= 0; --v) {
    current[pos] = v;
    compositions(vars, degree - v, current, pos + 1, out);
  }
  current[pos] = 0;
}

detail::Memo<Exponent, StairExpansion> stair_memo;

// x_k is a root of prod_{m >= k} (t - x_m), whose coefficients are
// e_j(x_k..x_n) = sum_l (-1)^l e_{j-l}(x_1..x_n) h_l(x_1..x_{k-1}). Each
// rewrite lowers the monomial in the lex order that compares x_n first, so
// the recursion terminates.
const StairExpansion& expand_monomial(const Exponent& a) {
  return stair_memo.get(a, [&a] {
    const int n = static_cast<int>(a.size());
    int k = -1;
    for (int idx = n - 1; idx >= 0; --idx)
      if (a[idx] > n - 1 - idx) {
        k = idx;
        break;
      }
    StairExpansion out;
    if (k < 0) {
      out[a][Partition{}] = 1;
      return out;
    }
    const int roots = n - k;  // number of variables x_k..x_n (0-based k)
    for (int j = 1; j <= roots; ++j) {
      for (int l = 0; l <= j; ++l) {
        if (l > 0 && k == 0) break;  // h_l of no variables vanishes
        const int sign = ((j + 1 + l) % 2 == 0) ? 1 : -1;
        EPoly factor;
        factor[j - l > 0 ? Partition{j - l} : Partition{}] = sign;
        std::vector<Exponent> hs;
        if (l == 0) {
          hs.push_back(Exponent(n, 0));
        } else {
          Exponent cur(n, 0);
          compositions(k, l, cur, 0, hs);
        }
        for (const auto& hmono : hs) {
          Exponent next(a);
          next[k] -= j;
          for (int idx = 0; idx < k; ++idx) next[idx] += hmono[idx];
          add_scaled(out, expand_monomial(next), factor);
        }
      }
    }
    return out;
  });
}

SymN epoly_to_symn(int n, const EPoly& coeffs) {
  return SymN(n, sym_from_basis(Basis::e, coeffs));
}

}  // namespace

std::map<Exponent, SymN> staircase_expand(const PolyN& p) {
  StairExpansion total;
  for (const auto& [a, c] : p.terms())
    add_scaled(total, expand_monomial(a), EPoly{{Partition{}, c}});
  std::map<Exponent, SymN> out;
  for (const auto& [b, coeffs] : total) out.emplace(b, epoly_to_symn(p.n(), coeffs));
  return out;
}

// --- matrices ---------------------------------------------------------------

NHMatrix::NHMatrix(int n, std::vector<std::vector<SymN>> entries)
    : n_(n), basis_(staircase_basis(n)), entries_(std::move(entries)) {
  if (entries_.size() != basis_.size())
    throw DomainError("matrix size does not match n!");
  for (const auto& row : entries_)
    if (row.size() != basis_.size()) throw DomainError("matrix size does not match n!");
}

NHMatrix NHMatrix::identity(int n) {
  const std::size_t size = staircase_basis(n).size();
  std::vector<std::vector<SymN>> entries(size, std::vector<SymN>(size, SymN::zero(n)));
  for (std::size_t k = 0; k < size; ++k) entries[k][k] = SymN::one(n);
  return NHMatrix(n, std::move(entries));
}

SymN NHMatrix::trace() const {
  SymN sum = SymN::zero(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) sum += entries_[k][k];
  return sum;
}

NHMatrix operator*(const NHMatrix& a, const NHMatrix& b) {
  check_same_n(a.n_, b.n_);
  const std::size_t size = a.basis_.size();
  std::vector<std::vector<SymN>> out(size, std::vector<SymN>(size, SymN::zero(a.n_)));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t k = 0; k < size; ++k) {
      if (a.entries_[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < size; ++c)
        if (!b.entries_[k][c].is_zero()) out[r][c] += a.entries_[r][k] * b.entries_[k][c];
    }
  return NHMatrix(a.n_, std::move(out));
}

bool operator==(const NHMatrix& a, const NHMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

NHMatrix to_matrix(const NHElement& e) {
  const int n = e.n();
  const auto basis = staircase_basis(n);
  std::vector<std::vector<SymN>> entries(basis.size(),
                                         std::vector<SymN>(basis.size(), SymN::zero(n)));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto image = staircase_expand(act(e, PolyN::monomial(n, basis[col])));
    for (const auto& [b, coeff] : image) {
      const auto row = std::lower_bound(basis.begin(), basis.end(), b) - basis.begin();
      entries[row][col] = coeff;
    }
  }
  return NHMatrix(n, std::move(entries));
}

SymN trace_class(const NHElement& e) { return to_matrix(e).trace(); }

bool equals(const NHElement& a, const NHElement& b) {
  check_same_n(a.n(), b.n());
  for (const auto& x : staircase_basis(a.n())) {
    const PolyN p = PolyN::monomial(a.n(), x);
    if (act(a, p) != act(b, p)) return false;
  }
  return true;
}

NHElement idempotent_e(int n) {
  Word w;
  for (int i = 1; i <= n; ++i)
    for (int rep = 0; rep < n - i; ++rep) w.push_back(Letter::dot(i));
  for (int block = 1; block < n; ++block)
    for (int i = block; i >= 1; --i) w.push_back(Letter::crossing(i));
  return NHElement::word(n, std::move(w));
}

SymN standard_basis_class(int n, const Partition& lambda) {
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more than n=" +
                      std::to_string(n) + " parts");
  Word w;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int rep = 0; rep < lambda[i - 1]; ++rep) w.push_back(Letter::dot(i));
  return trace_class(NHElement::word(n, std::move(w)) * idempotent_e(n));
}

// --- relations --------------------------------------------------------------

std::vector<RelationCheck> verify_relations(int n) {
  if (n < 1) throw DomainError("NH_n needs n >= 1");
  std::vector<RelationCheck> out;
  auto x = [n](int i) { return NHElement::word(n, {Letter::dot(i)}); };
  auto d = [n](int i) { return NHElement::word(n, {Letter::crossing(i)}); };
  const NHElement one = NHElement::identity(n);
  const NHElement zero(n);
  auto check = [&](std::string family, std::string instance, const NHElement& lhs,
                   const NHElement& rhs) {
    out.push_back({std::move(family), std::move(instance), equals(lhs, rhs)});
  };
  auto s = [](int v) { return std::to_string(v); };

  for (int i = 1; i < n; ++i) check("nil-square", "d" + s(i) + "^2 = 0", d(i) * d(i), zero);
  for (int i = 1; i + 1 < n; ++i)
    check("braid", "d" + s(i) + " d" + s(i + 1) + " d" + s(i) + " = d" + s(i + 1) + " d" +
                       s(i) + " d" + s(i + 1),
          d(i) * d(i + 1) * d(i), d(i + 1) * d(i) * d(i + 1));
  for (int i = 1; i < n; ++i) {
    check("dot-slide", "x" + s(i) + " d" + s(i) + " - d" + s(i) + " x" + s(i + 1) + " = 1",
          x(i) * d(i) - d(i) * x(i + 1), one);
    check("dot-slide", "d" + s(i) + " x" + s(i) + " - x" + s(i + 1) + " d" + s(i) + " = 1",
          d(i) * x(i) - x(i + 1) * d(i), one);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      check("dots-commute", "x" + s(i) + " x" + s(j) + " = x" + s(j) + " x" + s(i),
            x(i) * x(j), x(j) * x(i));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      check("crossings-commute", "d" + s(i) + " d" + s(j) + " = d" + s(j) + " d" + s(i),
            d(i) * d(j), d(j) * d(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) > 1)
        check("dot-crossing-commute", "x" + s(i) + " d" + s(j) + " = d" + s(j) + " x" + s(i),
              x(i) * d(j), d(j) * x(i));
  return out;
}

std::string to_text(const NHElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const Rational mag = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string word;
    for (const auto& l : w) {
      if (!word.empty()) word += " ";
      word += (l.kind == Letter::Kind::Dot ? "x" : "d") + std::to_string(l.index);
    }
    if (word.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += word;
    else
      out += to_string(mag) + " " + word;
  }
  return out;
}

}  // namespace tracecat::nh
