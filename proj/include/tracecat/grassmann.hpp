#pragma once

#include "tracecat/laurent.hpp"
#include "tracecat/partition.hpp"
#include "tracecat/rational.hpp"

#include <map>
#include <string>

namespace tracecat {

// A partition inside the k x (n-k) box.
class BoxPartition {
 public:
  // Throws DomainError unless 0 <= k <= n and lambda fits the box.
  BoxPartition(int k, int n, Partition lambda);

  int k() const { return k_; }
  int n() const { return n_; }
  const Partition& partition() const { return lambda_; }
  // Complement in the box, read from the opposite corner.
  BoxPartition complement() const;

  friend bool operator==(const BoxPartition&, const BoxPartition&) = default;

 private:
  int k_, n_;
  Partition lambda_;
};

/// An element of H*(Gr(k,n)) in the Schur basis s_lambda, lambda in the box.
class GrCohElement {
 public:
  using Terms = std::map<Partition, Rational>;

  GrCohElement(int k, int n);  // zero
  static GrCohElement one(int k, int n);
  // s_lambda, or 0 when lambda leaves the box.
  static GrCohElement schur(int k, int n, const Partition& lambda);
  // Image of e_j and (-1)^j h_j.
  static GrCohElement chern(int k, int n, int j);
  static GrCohElement dual_chern(int k, int n, int j);

  int k() const { return k_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws DomainError if lambda leaves the box.
  void add_term(const Partition& lambda, const Rational& c);

  GrCohElement& operator+=(const GrCohElement& o);
  GrCohElement& operator*=(const Rational& c);
  friend GrCohElement operator+(GrCohElement a, const GrCohElement& b) { return a += b; }
  friend GrCohElement operator*(const Rational& c, GrCohElement a) { return a *= c; }
  friend bool operator==(const GrCohElement&, const GrCohElement&) = default;

 private:
  void require_same_box(const GrCohElement& o) const;
  int k_, n_;
  Terms terms_;
};

// Schur product truncated to the box. Throws DomainError on a box mismatch.
GrCohElement gr_mul(const GrCohElement& a, const GrCohElement& b);

// sum_j c_j cbar_{alpha-j} = 0 for 1 <= alpha <= alpha_max.
bool ideal_relation_check(int k, int n, int alpha_max);

// sum over box partitions of q^{2|lambda|}.
LaurentPolyQ graded_dimension(int k, int n);

struct ChernReport {
  int k = 0, n = 0;
  int dimension = 0;      // binomial(n,k)
  int image_rank = 0;
  int cokernel_rank = 0;
  bool trivially_surjective = false;  // k in {0, n}
};

// The map Z = K_0 -> H*(Gr(k,n)) sending 1 to the unit class.
ChernReport chern_character_report(int k, int n);

}  // namespace tracecat
