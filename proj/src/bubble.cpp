#include "tracecat/bubble.hpp"

#include "tracecat/errors.hpp"
#include "memo.hpp"

#include <algorithm>
#include <utility>

namespace tracecat {
namespace {

void accumulate(CenterElement::Terms& into, const BubbleMonomial& m, const Rational& c) {
  if (tracecat::is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (tracecat::is_zero(it->second)) into.erase(it);
  }
}

BubbleMonomial merge(const BubbleMonomial& a, const BubbleMonomial& b) {
  BubbleMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// --- CenterElement ----------------------------------------------------------

CenterElement CenterElement::constant(Weight w, const Rational& c) {
  CenterElement e(std::move(w));
  e.add_term({}, c);
  return e;
}

CenterElement CenterElement::generator(Weight w, int node, int alpha) {
  CenterElement e(std::move(w));
  e.add_term({{node, alpha}}, 1);
  return e;
}

std::optional<int> CenterElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = 0;
    for (const auto& g : m) dm += 2 * g.alpha;
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

Rational CenterElement::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

void CenterElement::add_term(BubbleMonomial m, const Rational& c) {
  for (const auto& g : m)
    if (g.alpha < 1) throw DomainError("bubble generators need alpha >= 1");
  std::sort(m.begin(), m.end());
  accumulate(terms_, m, c);
}

CenterElement CenterElement::retagged(Weight w) const {
  CenterElement out(std::move(w));
  out.terms_ = terms_;
  return out;
}

void CenterElement::require_same_weight(const CenterElement& o) const {
  if (weight_ != o.weight_)
    throw DomainError("center elements live at different weights " + weight_.to_string() +
                      " and " + o.weight_.to_string());
}

CenterElement& CenterElement::operator+=(const CenterElement& o) {
  require_same_weight(o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& o) {
  require_same_weight(o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

CenterElement& CenterElement::operator*=(const Rational& c) {
  if (tracecat::is_zero(c)) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

CenterElement operator*(const CenterElement& a, const CenterElement& b) {
  a.require_same_weight(b);
  CenterElement out(a.weight_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) accumulate(out.terms_, merge(ma, mb), ca * cb);
  return out;
}

// --- bubbles ----------------------------------------------------------------

CenterElement cw_bubble(const CartanData& cd, int i, int alpha, const Weight& lambda) {
  cd.check_node(i);
  cd.check_weight(lambda);
  if (alpha < 0) return CenterElement(lambda);
  if (alpha == 0) return CenterElement::constant(lambda, 1);
  return CenterElement::generator(lambda, i, alpha);
}

namespace {

detail::Memo<std::pair<int, int>, CenterElement::Terms> cc_memo;

// cc_alpha as a polynomial in b_{i,1..alpha}, independent of the weight.
const CenterElement::Terms& cc_terms(int i, int alpha) {
  return cc_memo.get({i, alpha}, [i, alpha] {
    CenterElement::Terms out;
    if (alpha == 0) {
      out[{}] = 1;
      return out;
    }
    for (int b = 1; b <= alpha; ++b)
      for (const auto& [m, c] : cc_terms(i, alpha - b))
        accumulate(out, merge(m, {{i, b}}), -c);
    return out;
  });
}

}  // namespace

CenterElement cc_bubble(const CartanData& cd, int i, int alpha, const Weight& lambda) {
  cd.check_node(i);
  cd.check_weight(lambda);
  CenterElement out(lambda);
  if (alpha < 0) return out;
  for (const auto& [m, c] : cc_terms(i, alpha)) out.add_term(m, c);
  return out;
}

CenterElement spade_bubble(const CartanData& cd, int i, Orientation o, int alpha,
                           const Weight& lambda) {
  return o == Orientation::Clockwise ? cw_bubble(cd, i, alpha, lambda)
                                     : cc_bubble(cd, i, alpha, lambda);
}

int spade_offset(Orientation o, int dots, int lambda_i) {
  return o == Orientation::Clockwise ? dots - (lambda_i - 1) : dots - (-lambda_i - 1);
}

CenterElement from_absolute(const CartanData& cd, int i, Orientation o, int dots,
                            const Weight& lambda) {
  cd.check_node(i);
  cd.check_weight(lambda);
  if (dots < 0) throw DomainError("dot count must be nonnegative");
  return spade_bubble(cd, i, o, spade_offset(o, dots, lambda[i]), lambda);
}

bool infinite_grassmannian_check(const CartanData& cd, int i, int alpha_max,
                                 const Weight& lambda) {
  const int cw_spade = lambda[i] - 1;
  const int cc_spade = -lambda[i] - 1;
  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    CenterElement sum(lambda);
    for (int a = 0; a <= alpha; ++a) {
      const int b = alpha - a;
      // Bubbles with a nonnegative dot count are read as diagrams, the rest
      // are fake.
      const CenterElement cw = cw_spade + b >= 0
          ? from_absolute(cd, i, Orientation::Clockwise, cw_spade + b, lambda)
          : cw_bubble(cd, i, b, lambda);
      const CenterElement cc = cc_spade + a >= 0
          ? from_absolute(cd, i, Orientation::Counterclockwise, cc_spade + a, lambda)
          : cc_bubble(cd, i, a, lambda);
      sum += cc * cw;
    }
    if (sum != CenterElement::constant(lambda, alpha == 0 ? 1 : 0)) return false;
  }
  return true;
}

CenterElement power_sum_formula(const CartanData& cd, int i, int r, const Weight& lambda,
                                PowerSumFormula which) {
  CenterElement out(lambda);
  for (int a = 0; a <= r; ++a) {
    const int b = r - a;
    switch (which) {
      case PowerSumFormula::WeightedClockwise:
        out += Rational(a + 1) * (cw_bubble(cd, i, a, lambda) * cc_bubble(cd, i, b, lambda));
        break;
      case PowerSumFormula::WeightedCounterclockwise:
        out -= Rational(b + 1) * (cw_bubble(cd, i, a, lambda) * cc_bubble(cd, i, b, lambda));
        break;
      case PowerSumFormula::Derivative:
        out -= Rational(a) * (cw_bubble(cd, i, b, lambda) * cc_bubble(cd, i, a, lambda));
        break;
    }
  }
  return out;
}

CenterElement power_sum(const CartanData& cd, int i, int r, const Weight& lambda) {
  cd.check_node(i);
  cd.check_weight(lambda);
  if (r < 0) throw DomainError("power sum index must be nonnegative");
  if (r == 0) return CenterElement::constant(lambda, lambda[i]);
  return power_sum_formula(cd, i, r, lambda, PowerSumFormula::WeightedClockwise);
}

SymFn to_sym(const CenterElement& e, int node) {
  SymFn out;
  for (const auto& [m, c] : e.terms()) {
    std::vector<int> parts;
    for (const auto& g : m) {
      if (g.node != node)
        throw DomainError("element involves node " + std::to_string(g.node) + ", not only " +
                          std::to_string(node));
      parts.push_back(g.alpha);
    }
    out.add_term(Partition::from_unsorted(std::move(parts)), c);
  }
  return out;
}

CenterElement from_sym(const CartanData& cd, const SymFn& f, int node, const Weight& lambda) {
  cd.check_node(node);
  cd.check_weight(lambda);
  CenterElement out(lambda);
  for (const auto& [mu, c] : f.terms()) {
    BubbleMonomial m;
    for (int part : mu.parts()) m.push_back({node, part});
    out.add_term(std::move(m), c);
  }
  return out;
}

// --- slides -----------------------------------------------------------------

namespace {

bool raises(const Strand& s) {
  return (s.orientation == StrandOrientation::Up) == (s.direction == SlideDirection::RightToLeft);
}

// Polynomial in the strand dot with center coefficients at one weight.
using DotPoly = std::map<int, CenterElement>;

void add_to(DotPoly& p, int dots, const CenterElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(dots, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

DotPoly multiply(const DotPoly& a, const DotPoly& b) {
  DotPoly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) add_to(out, da + db, ca * cb);
  return out;
}

DotPoly slide_generator(const CartanData& cd, int i, int alpha, Orientation o,
                        const Strand& s, const Weight& target) {
  DotPoly out;
  for (const auto& t : slide_rule(cd, i, alpha, o, s))
    add_to(out, t.dots, t.coeff * spade_bubble(cd, i, o, t.offset, target));
  return out;
}

std::vector<DottedStrandTerm> to_terms(const Strand& s, DotPoly p) {
  std::vector<DottedStrandTerm> out;
  for (auto& [d, c] : p) out.push_back({s, d, std::move(c)});
  return out;
}

}  // namespace

std::vector<SlideRuleTerm> slide_rule(const CartanData& cd, int i, int alpha, Orientation o,
                                      const Strand& s) {
  std::vector<SlideRuleTerm> out;
  if (alpha < 0) return out;
  const int a = cd.cartan(i, s.node);
  if (a == 0) {
    out.push_back({0, 1, alpha});
    return out;
  }
  const Rational v = cd.v(i, s.node);
  // Clockwise bubbles moving up in weight and counterclockwise ones moving
  // down follow one rule; the other two cases use the inverse series in the
  // strand dot.
  const bool forward = raises(s) == (o == Orientation::Clockwise);
  if (a == 2) {
    if (forward) {
      out.push_back({0, 1, alpha});
      out.push_back({1, -2, alpha - 1});
      out.push_back({2, 1, alpha - 2});
    } else {
      for (int f = 0; f <= alpha; ++f) out.push_back({alpha - f, alpha + 1 - f, f});
    }
  } else if (forward) {
    Rational coeff = 1;
    for (int f = 0; f <= alpha; ++f) {
      out.push_back({f, coeff, alpha - f});
      coeff *= -v;
    }
  } else {
    out.push_back({0, 1, alpha});
    out.push_back({1, v, alpha - 1});
  }
  std::erase_if(out, [](const SlideRuleTerm& t) { return t.offset < 0 || tracecat::is_zero(t.coeff); });
  return out;
}

Weight slide_target(const CartanData& cd, const Strand& s, const Weight& source) {
  cd.check_node(s.node);
  return raises(s) ? cd.raise(source, s.node) : cd.lower(source, s.node);
}

std::vector<DottedStrandTerm> slide_bubble_past_strand(const CartanData& cd, int i, int alpha,
                                                       Orientation o, const Strand& strand,
                                                       const Weight& source) {
  cd.check_node(i);
  const Weight target = slide_target(cd, strand, source);
  return to_terms(strand, slide_generator(cd, i, alpha, o, strand, target));
}

std::vector<DottedStrandTerm> slide_center_past_strand(const CartanData& cd,
                                                       const CenterElement& e,
                                                       const Strand& strand) {
  cd.check_weight(e.weight());
  const Weight target = slide_target(cd, strand, e.weight());
  std::map<std::pair<int, int>, DotPoly> generator_cache;
  DotPoly total;
  for (const auto& [m, c] : e.terms()) {
    DotPoly acc;
    acc.emplace(0, CenterElement::constant(target, c));
    for (const auto& g : m) {
      cd.check_node(g.node);
      auto it = generator_cache.find({g.node, g.alpha});
      if (it == generator_cache.end())
        it = generator_cache
                 .emplace(std::pair{g.node, g.alpha},
                          slide_generator(cd, g.node, g.alpha, Orientation::Clockwise, strand,
                                          target))
                 .first;
      acc = multiply(acc, it->second);
    }
    for (const auto& [d, x] : acc) add_to(total, d, x);
  }
  return to_terms(strand, std::move(total));
}

Rational power_slide_correction(const CartanData& cd, int i, int j, int r) {
  switch (cd.cartan(i, j)) {
    case 2:
      return -2;
    case -1: {
      Rational out = 1;
      const Rational step = -cd.v(i, j);
      for (int k = 0; k < r; ++k) out *= step;
      return out;
    }
    default:
      return 0;
  }
}

bool power_slide_check(const CartanData& cd, int i, int j, int r, const Weight& lambda) {
  cd.check_node(i);
  cd.check_node(j);
  cd.check_weight(lambda);
  if (r < 0) throw DomainError("power sum index must be nonnegative");
  const Rational corr = power_slide_correction(cd, i, j, r);

  auto matches = [&](const std::vector<DottedStrandTerm>& got, const Rational& sign) {
    DotPoly expected;
    add_to(expected, 0, power_sum(cd, i, r, lambda));
    add_to(expected, r, CenterElement::constant(lambda, sign * corr));
    DotPoly actual;
    for (const auto& t : got) add_to(actual, t.dots, t.coefficient);
    return actual == expected;
  };

  const Strand leftward{j, StrandOrientation::Up, SlideDirection::RightToLeft};
  const Strand rightward{j, StrandOrientation::Up, SlideDirection::LeftToRight};
  const auto from_right = slide_center_past_strand(cd, power_sum(cd, i, r, cd.lower(lambda, j)),
                                                   leftward);
  const auto from_left = slide_center_past_strand(cd, power_sum(cd, i, r, cd.raise(lambda, j)),
                                                  rightward);
  return matches(from_right, 1) && matches(from_left, -1);
}

}  // namespace tracecat
