#pragma once

#include "tracecat/cartan.hpp"
#include "tracecat/rational.hpp"
#include "tracecat/symfunc.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace tracecat {

// Clockwise i-colored bubble with spade offset alpha >= 1.
struct BubbleGen {
  int node;
  int alpha;
  friend auto operator<=>(const BubbleGen&, const BubbleGen&) = default;
};

// Multiset of generators, kept sorted by (node, alpha).
using BubbleMonomial = std::vector<BubbleGen>;

/// An element of the center Z(lambda): a polynomial in the clockwise spade
/// bubbles b_{i,alpha}, tagged with its weight.
class CenterElement {
 public:
  using Terms = std::map<BubbleMonomial, Rational>;

  CenterElement() = default;
  explicit CenterElement(Weight w) : weight_(std::move(w)) {}
  static CenterElement constant(Weight w, const Rational& c);
  static CenterElement generator(Weight w, int node, int alpha);

  const Weight& weight() const { return weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Sum of 2*alpha over each term when homogeneous; nullopt otherwise.
  std::optional<int> degree() const;
  Rational constant_term() const;

  // Sorts m; throws DomainError if some alpha < 1.
  void add_term(BubbleMonomial m, const Rational& c);
  CenterElement retagged(Weight w) const;

  CenterElement& operator+=(const CenterElement& o);
  CenterElement& operator-=(const CenterElement& o);
  CenterElement& operator*=(const Rational& c);
  friend CenterElement operator+(CenterElement a, const CenterElement& b) { return a += b; }
  friend CenterElement operator-(CenterElement a, const CenterElement& b) { return a -= b; }
  friend CenterElement operator*(CenterElement a, const Rational& c) { return a *= c; }
  friend CenterElement operator*(const Rational& c, CenterElement a) { return a *= c; }
  friend CenterElement operator*(const CenterElement& a, const CenterElement& b);
  friend bool operator==(const CenterElement&, const CenterElement&) = default;

 private:
  void require_same_weight(const CenterElement& o) const;
  Weight weight_;
  Terms terms_;
};

enum class Orientation { Clockwise, Counterclockwise };

// Clockwise spade+alpha bubble: 0 for alpha < 0, 1 for alpha = 0.
CenterElement cw_bubble(const CartanData& cd, int i, int alpha, const Weight& lambda);

// Counterclockwise spade+alpha bubble in clockwise generators, from
// sum_{a+b=alpha} cc_a c_b = delta_{alpha,0}.
CenterElement cc_bubble(const CartanData& cd, int i, int alpha, const Weight& lambda);

CenterElement spade_bubble(const CartanData& cd, int i, Orientation o, int alpha,
                           const Weight& lambda);

// Bubble with an absolute number of dots, converted to spade form.
CenterElement from_absolute(const CartanData& cd, int i, Orientation o, int dots,
                            const Weight& lambda);
int spade_offset(Orientation o, int dots, int lambda_i);

// sum_{a+b=alpha} cc_a c_b for every alpha <= alpha_max; true iff it is
// delta_{alpha,0}, with c_b read through from_absolute.
bool infinite_grassmannian_check(const CartanData& cd, int i, int alpha_max,
                                 const Weight& lambda);

enum class PowerSumFormula { WeightedClockwise, WeightedCounterclockwise, Derivative };

// p_{i,r}(lambda); p_{i,0}(lambda) = lambda_i.
CenterElement power_sum(const CartanData& cd, int i, int r, const Weight& lambda);
// One of the three equivalent bubble expressions; meaningful for r >= 1.
CenterElement power_sum_formula(const CartanData& cd, int i, int r, const Weight& lambda,
                                PowerSumFormula which);

// psi_lambda restricted to one node: b_{i,alpha} <-> h_alpha. to_sym throws
// DomainError if e involves another node.
SymFn to_sym(const CenterElement& e, int node);
CenterElement from_sym(const CartanData& cd, const SymFn& f, int node, const Weight& lambda);

enum class StrandOrientation { Up, Down };
enum class SlideDirection { RightToLeft, LeftToRight };

// An E_j (up) or F_j (down) strand, and the side a bubble moves across it.
struct Strand {
  int node;
  StrandOrientation orientation;
  SlideDirection direction;
};

// Weight of the region a bubble lands in when it starts at `source`.
Weight slide_target(const CartanData& cd, const Strand& s, const Weight& source);

struct DottedStrandTerm {
  Strand strand;
  int dots;
  CenterElement coefficient;  // at the target weight
};

// One term of a slide rule: `coeff` times the bubble of the same color and
// orientation with spade offset `offset` at the target weight, times `dots`
// strand dots. Offsets are nonnegative; offset 0 stands for 1.
struct SlideRuleTerm {
  int dots;
  Rational coeff;
  int offset;
};

std::vector<SlideRuleTerm> slide_rule(const CartanData& cd, int i, int alpha, Orientation o,
                                      const Strand& strand);

// A single spade bubble of color i moved across the strand. Terms are sorted
// by dot count and have nonzero coefficients.
std::vector<DottedStrandTerm> slide_bubble_past_strand(const CartanData& cd, int i, int alpha,
                                                       Orientation o, const Strand& strand,
                                                       const Weight& source);

// Monomial-by-monomial slide of e, multiplying strand dots.
std::vector<DottedStrandTerm> slide_center_past_strand(const CartanData& cd,
                                                       const CenterElement& e,
                                                       const Strand& strand);

// Power-sum slides across an upward j-strand whose left region is lambda, in
// both directions.
bool power_slide_check(const CartanData& cd, int i, int j, int r, const Weight& lambda);

// Coefficient c with p_{i,r}(right) = p_{i,r}(left) + c x^r across an upward
// j-strand.
Rational power_slide_correction(const CartanData& cd, int i, int j, int r);

}  // namespace tracecat
