#include "oracle.hpp"
#include "printers.hpp"

#include "tracecat/errors.hpp"
#include "tracecat/grassmann.hpp"

#include <gtest/gtest.h>

using namespace tracecat;

namespace {

std::vector<Partition> box(int k, int n) {
  std::vector<Partition> out;
  for (int d = 0; d <= k * (n - k); ++d)
    for (const auto& p : partitions_of(d, n - k, k)) out.push_back(p);
  return out;
}

// Product of Schur polynomials in k variables, expanded by tableaux and cut
// down to the box.
GrCohElement tableaux_product(int k, int n, const Partition& a, const Partition& b) {
  GrCohElement out(k, n);
  if (k == 0) {
    if (a.size() == 0 && b.size() == 0) out.add_term(Partition(), 1);
    return out;
  }
  const auto prod = oracle::schur_tableaux(a, k) * oracle::schur_tableaux(b, k);
  for (const auto& [nu, c] : oracle::schur_decompose(prod))
    if (nu.fits_in_box(k, n - k)) out.add_term(nu, c);
  return out;
}

GrCohElement element(int k, int n, const std::map<Partition, Rational>& terms) {
  GrCohElement e(k, n);
  for (const auto& [p, c] : terms) e.add_term(p, c);
  return e;
}

}  // namespace

TEST(Box, PartitionsAndComplement) {
  EXPECT_THROW(BoxPartition(2, 4, Partition{3}), DomainError);
  EXPECT_THROW(BoxPartition(1, 4, Partition{1, 1}), DomainError);
  EXPECT_THROW(BoxPartition(3, 2, Partition()), DomainError);
  EXPECT_EQ(BoxPartition(2, 4, Partition{1}).complement().partition(), (Partition{2, 1}));
  EXPECT_EQ(BoxPartition(2, 5, Partition{3, 1}).complement().partition(), (Partition{2}));
  EXPECT_EQ(BoxPartition(2, 4, Partition()).complement().partition(), (Partition{2, 2}));
  for (const auto& p : box(3, 6)) {
    const BoxPartition b(3, 6, p);
    EXPECT_EQ(b.complement().complement(), b);
    EXPECT_EQ(b.partition().size() + b.complement().partition().size(), 9);
  }
}

TEST(Cohomology, Examples) {
  const auto c1 = GrCohElement::chern(1, 2, 1);
  EXPECT_TRUE(gr_mul(c1, c1).is_zero());
  const auto s1 = GrCohElement::schur(2, 4, Partition{1});
  EXPECT_EQ(gr_mul(s1, s1), element(2, 4, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  EXPECT_TRUE(GrCohElement::schur(2, 4, Partition{3}).is_zero());
  EXPECT_EQ(gr_mul(GrCohElement::one(2, 4), s1), s1);
  EXPECT_THROW(GrCohElement(2, 4).add_term(Partition{1, 1, 1}, 1), DomainError);
  EXPECT_THROW(gr_mul(s1, GrCohElement::one(2, 5)), DomainError);
  EXPECT_THROW(GrCohElement(2, 4) + GrCohElement(1, 4), DomainError);
}

TEST(Cohomology, ProductMatchesTableauxInKVariables) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}})
    for (const auto& a : box(k, n))
      for (const auto& b : box(k, n)) {
        if (a.size() + b.size() > 8) continue;
        EXPECT_EQ(gr_mul(GrCohElement::schur(k, n, a), GrCohElement::schur(k, n, b)),
                  tableaux_product(k, n, a, b))
            << k << "," << n << " " << a.to_string() << " " << b.to_string();
      }
}

TEST(Cohomology, ChernClasses) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n + 1; ++j) {
        const Partition column(std::vector<int>(j, 1));
        const Partition row = j ? Partition{j} : Partition();
        EXPECT_EQ(GrCohElement::chern(k, n, j), GrCohElement::schur(k, n, column));
        EXPECT_EQ(GrCohElement::dual_chern(k, n, j),
                  oracle::sign(j) * GrCohElement::schur(k, n, row));
      }
}

TEST(Cohomology, RingAxioms) {
  const int k = 2, n = 5;
  const auto basis = box(k, n);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto sa = GrCohElement::schur(k, n, a), sb = GrCohElement::schur(k, n, b);
      EXPECT_EQ(gr_mul(sa, sb), gr_mul(sb, sa));
      for (const auto& c : {Partition{1}, Partition{2, 1}}) {
        const auto sc = GrCohElement::schur(k, n, c);
        EXPECT_EQ(gr_mul(gr_mul(sa, sb), sc), gr_mul(sa, gr_mul(sb, sc)));
        EXPECT_EQ(gr_mul(sa + sb, sc), gr_mul(sa, sc) + gr_mul(sb, sc));
      }
    }
}

TEST(Cohomology, PoincareDuality) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {1, 4}, {2, 5}}) {
    const Partition top(std::vector<int>(k, n - k));
    for (const auto& a : box(k, n))
      for (const auto& b : box(k, n)) {
        const auto prod = gr_mul(GrCohElement::schur(k, n, a), GrCohElement::schur(k, n, b));
        const auto it = prod.terms().find(top);
        const Rational coeff = it == prod.terms().end() ? Rational(0) : it->second;
        const bool dual = BoxPartition(k, n, a).complement().partition() == b;
        EXPECT_EQ(coeff, dual ? 1 : 0) << a.to_string() << " " << b.to_string();
      }
  }
}

TEST(Presentation, IdealRelations) {
  EXPECT_TRUE(ideal_relation_check(1, 2, 2));
  EXPECT_TRUE(ideal_relation_check(1, 3, 3));
  EXPECT_TRUE(ideal_relation_check(2, 4, 4));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(ideal_relation_check(k, n, 2 * n)) << k << n;
}

TEST(Presentation, UnsignedDualClassesFail) {
  // With cbar_j read as h_j instead of (-1)^j h_j the relation breaks at alpha = 1.
  const int k = 1, n = 2;
  GrCohElement total(k, n);
  for (int j = 0; j <= 1; ++j)
    total += gr_mul(GrCohElement::chern(k, n, j), GrCohElement::schur(k, n, j == 1 ? Partition() : Partition{1}));
  EXPECT_FALSE(total.is_zero());
  GrCohElement signed_total(k, n);
  for (int j = 0; j <= 1; ++j)
    signed_total += gr_mul(GrCohElement::chern(k, n, j), GrCohElement::dual_chern(k, n, 1 - j));
  EXPECT_TRUE(signed_total.is_zero());
}

TEST(Presentation, IdealRelationsByTableaux) {
  // sum_j e_j (-1)^{a-j} h_{a-j} in k variables, cut to the box.
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}})
    for (int a = 1; a <= n; ++a) {
      oracle::Poly total(k);
      for (int j = 0; j <= a; ++j)
        total += (oracle::elementary(j, k) * oracle::complete(a - j, k)).scaled(oracle::sign(a - j));
      for (const auto& [nu, c] : oracle::schur_decompose(total))
        EXPECT_FALSE(nu.fits_in_box(k, n - k)) << nu.to_string();
    }
}

TEST(Dimension, GaussianBinomial) {
  EXPECT_EQ(graded_dimension(1, 2).to_string(), "1 + q^2");
  EXPECT_EQ(graded_dimension(2, 4).to_string(), "1 + q^2 + 2q^4 + q^6 + q^8");
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(graded_dimension(k, n), gaussian_binomial(n, k)) << k << "," << n;
      EXPECT_EQ(graded_dimension(k, n).evaluate_at_one(),
                Rational(static_cast<long>(box(k, n).size())));
    }
}

TEST(Chern, Reports) {
  const auto r12 = chern_character_report(1, 2);
  EXPECT_EQ(r12.dimension, 2);
  EXPECT_EQ(r12.image_rank, 1);
  EXPECT_EQ(r12.cokernel_rank, 1);
  EXPECT_FALSE(r12.trivially_surjective);
  const auto r24 = chern_character_report(2, 4);
  EXPECT_EQ(r24.dimension, 6);
  EXPECT_EQ(r24.cokernel_rank, 5);
  const auto r03 = chern_character_report(0, 3);
  EXPECT_EQ(r03.dimension, 1);
  EXPECT_EQ(r03.cokernel_rank, 0);
  EXPECT_TRUE(r03.trivially_surjective);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto r = chern_character_report(k, n);
      EXPECT_EQ(r.dimension, static_cast<int>(box(k, n).size()));
      EXPECT_EQ(r.image_rank + r.cokernel_rank, r.dimension);
    }
  EXPECT_THROW(chern_character_report(3, 2), DomainError);
}
