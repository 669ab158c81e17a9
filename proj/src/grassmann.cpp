#include "tracecat/grassmann.hpp"

#include "memo.hpp"
#include "tracecat/errors.hpp"
#include "tracecat/symfunc.hpp"

#include <utility>

namespace tracecat {

namespace {

void check_box(int k, int n) {
  if (k < 0 || n < 0 || k > n)
    throw DomainError("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs 0 <= k <= n");
}

// Schur expansion of s_mu s_nu, untruncated.
const Expansion& schur_product(const Partition& mu, const Partition& nu) {
  static detail::Memo<std::pair<Partition, Partition>, Expansion> memo;
  const auto key = nu < mu ? std::pair{nu, mu} : std::pair{mu, nu};
  return memo.get(key, [&] { return to_basis(schur(key.first) * schur(key.second), Basis::schur); });
}

}  // namespace

BoxPartition::BoxPartition(int k, int n, Partition lambda) : k_(k), n_(n), lambda_(std::move(lambda)) {
  check_box(k, n);
  if (!lambda_.fits_in_box(k, n - k))
    throw DomainError("partition " + lambda_.to_string() + " leaves the " + std::to_string(k) +
                      "x" + std::to_string(n - k) + " box");
}

BoxPartition BoxPartition::complement() const {
  std::vector<int> parts;
  for (int r = k_ - 1; r >= 0; --r) parts.push_back(n_ - k_ - lambda_[r]);
  return BoxPartition(k_, n_, Partition::from_unsorted(parts));
}

GrCohElement::GrCohElement(int k, int n) : k_(k), n_(n) { check_box(k, n); }

GrCohElement GrCohElement::one(int k, int n) { return schur(k, n, Partition{}); }

GrCohElement GrCohElement::schur(int k, int n, const Partition& lambda) {
  GrCohElement out(k, n);
  if (lambda.fits_in_box(k, n - k)) out.add_term(lambda, 1);
  return out;
}

GrCohElement GrCohElement::chern(int k, int n, int j) {
  if (j < 0) return GrCohElement(k, n);
  return schur(k, n, Partition(std::vector<int>(j, 1)));
}

GrCohElement GrCohElement::dual_chern(int k, int n, int j) {
  if (j < 0) return GrCohElement(k, n);
  GrCohElement out = schur(k, n, j == 0 ? Partition{} : Partition{j});
  return Rational(j % 2 == 0 ? 1 : -1) * out;
}

void GrCohElement::add_term(const Partition& lambda, const Rational& c) {
  if (!lambda.fits_in_box(k_, n_ - k_))
    throw DomainError("partition " + lambda.to_string() + " leaves the box");
  if (tracecat::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (tracecat::is_zero(it->second)) terms_.erase(it);
  }
}

void GrCohElement::require_same_box(const GrCohElement& o) const {
  if (k_ != o.k_ || n_ != o.n_)
    throw DomainError("Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ") and Gr(" +
                      std::to_string(o.k_) + "," + std::to_string(o.n_) + ") do not match");
}

GrCohElement& GrCohElement::operator+=(const GrCohElement& o) {
  require_same_box(o);
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

GrCohElement& GrCohElement::operator*=(const Rational& c) {
  if (tracecat::is_zero(c)) terms_.clear();
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

GrCohElement gr_mul(const GrCohElement& a, const GrCohElement& b) {
  if (a.k() != b.k() || a.n() != b.n()) {
    GrCohElement check = a;
    check += b;  // throws the mismatch
  }
  const int k = a.k(), n = a.n();
  GrCohElement out(k, n);
  for (const auto& [mu, x] : a.terms())
    for (const auto& [nu, y] : b.terms()) {
      if (mu.size() + nu.size() > k * (n - k)) continue;
      for (const auto& [lambda, c] : schur_product(mu, nu))
        if (lambda.fits_in_box(k, n - k)) out.add_term(lambda, x * y * c);
    }
  return out;
}

bool ideal_relation_check(int k, int n, int alpha_max) {
  check_box(k, n);
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    GrCohElement sum(k, n);
    for (int j = 0; j <= alpha; ++j)
      sum += gr_mul(GrCohElement::chern(k, n, j), GrCohElement::dual_chern(k, n, alpha - j));
    if (!sum.is_zero()) return false;
  }
  return true;
}

LaurentPolyQ graded_dimension(int k, int n) {
  check_box(k, n);
  LaurentPolyQ out;
  for (int d = 0; d <= k * (n - k); ++d) {
    const auto count = partitions_of(d, n - k, k).size();
    if (count) out += LaurentPolyQ::monomial(2 * d, static_cast<long>(count));
  }
  return out;
}

ChernReport chern_character_report(int k, int n) {
  check_box(k, n);
  ChernReport r;
  r.k = k;
  r.n = n;
  r.dimension = static_cast<int>(graded_dimension(k, n).evaluate_at_one().get_num().get_si());
  r.image_rank = 1;
  r.cokernel_rank = r.dimension - 1;
  r.trivially_surjective = k == 0 || k == n;
  return r;
}

}  // namespace tracecat
