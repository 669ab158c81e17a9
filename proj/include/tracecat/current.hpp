#pragma once

#include "tracecat/bubble.hpp"
#include "tracecat/cartan.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace tracecat {

/// A finitely supported family of center elements, one per weight.
class CenterVector {
 public:
  CenterVector() = default;
  explicit CenterVector(const CenterElement& e) { add(e); }

  const std::map<Weight, CenterElement>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  void add(const CenterElement& e);
  CenterVector& operator+=(const CenterVector& o);
  CenterVector& operator-=(const CenterVector& o);
  CenterVector& operator*=(const Rational& c);
  friend CenterVector operator+(CenterVector a, const CenterVector& b) { return a += b; }
  friend CenterVector operator-(CenterVector a, const CenterVector& b) { return a -= b; }
  friend CenterVector operator*(const Rational& c, CenterVector a) { return a *= c; }
  friend bool operator==(const CenterVector&, const CenterVector&) = default;

 private:
  std::map<Weight, CenterElement> components_;
};

struct CurrentGen {
  enum class Kind { XPlus, XMinus, Xi, Idem };
  Kind kind;
  int node = 0;    // unused for Idem
  int degree = 0;  // unused for Idem
  Weight weight;   // only for Idem

  static CurrentGen xplus(int i, int r) { return {Kind::XPlus, i, r, {}}; }
  static CurrentGen xminus(int i, int r) { return {Kind::XMinus, i, r, {}}; }
  static CurrentGen xi(int i, int r) { return {Kind::Xi, i, r, {}}; }
  static CurrentGen idem(Weight w) { return {Kind::Idem, 0, 0, std::move(w)}; }

  std::string to_string() const;  // "x+[1,2]", "x-[1,0]", "xi[2,3]", "1[2,-1]"
  friend auto operator<=>(const CurrentGen&, const CurrentGen&) = default;
};

// How a closed i-loop carrying m dots is evaluated once everything inside it
// has been slid out: the E loop is read as a bubble of orientation
// `e_loop`, the F loop with the opposite orientation, at either the inner or
// the outer weight of the loop.
struct ClosureConvention {
  Orientation e_loop;
  bool read_outside;
  friend bool operator==(const ClosureConvention&, const ClosureConvention&) = default;
};

// Candidates for which [x+_{1,0}, x-_{1,0}] = xi_{1,0} on the unit of Z(lambda)
// for sl_2 and lambda in [-4,4].
std::vector<ClosureConvention> passing_closures();
// The unique passing candidate, computed once; throws std::logic_error if
// the calibration is not unique.
const ClosureConvention& calibrated_closure();

// Wrap f in an i-colored E loop (up = true) or F loop carrying `dots` dots and
// evaluate at lambda +- alpha_i. No sign twist.
CenterElement encircle(const CartanData& cd, int i, bool up, int dots, const CenterElement& f,
                       const ClosureConvention& closure);

// All four throw DomainError unless cd passes the scalar gate.
CenterVector act(const CartanData& cd, const CurrentGen& g, const CenterVector& v);
CenterVector act_xplus(const CartanData& cd, int i, int r, const CenterVector& v);
CenterVector act_xminus(const CartanData& cd, int i, int s, const CenterVector& v);
CenterVector act_xi(const CartanData& cd, int i, int r, const CenterVector& v);

// Word applied rightmost letter first.
CenterVector act_word(const CartanData& cd, const std::vector<CurrentGen>& word,
                      const CenterVector& v);

// Coefficients in {-3..3}, at most 3 terms of at most 4 generators with
// alpha <= 3. Uses only raw engine output so sequences are portable.
CenterElement random_center_element(const CartanData& cd, const Weight& lambda,
                                    std::mt19937_64& rng);

struct AxiomResult {
  std::string axiom;     // "C1".."C6"
  std::string instance;  // "i=1 j=2 r=1 k=2 pm=+"
  Weight lambda;
  int failures = 0;      // failing trials
  bool passed() const { return failures == 0; }
};

struct CurrentReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<AxiomResult> results;
  bool all_passed() const;
};

// Both sides of every instance of C1-C6 with generator degrees up to
// max_degree, applied to `trials` random vectors at each weight of the box
// [wmin, wmax]^(n-1). Results are ordered by axiom, instance and weight,
// independent of `threads`.
CurrentReport verify_current_relations(const CartanData& cd, int wmin, int wmax,
                                       int max_degree, int trials, std::uint64_t seed,
                                       int threads = 1);

// [x+_r, x-_s] = xi_{r+s} in sl_2 on the unit and `trials` random elements at
// every lambda in [wmin, wmax].
bool sl2_commutator_check(int r, int s, int wmin, int wmax, int trials, std::uint64_t seed);

}  // namespace tracecat
