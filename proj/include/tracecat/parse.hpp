#pragma once

#include "tracecat/bubble.hpp"
#include "tracecat/cartan.hpp"
#include "tracecat/current.hpp"
#include "tracecat/grassmann.hpp"
#include "tracecat/nilhecke.hpp"
#include "tracecat/symfunc.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

// Text grammars. All parsers throw ParseError on malformed input and
// DomainError on well-formed input that is out of range.
//
//   expression := term (("+" | "-") term)*
//   term       := coeff? factor*          (an empty product is 1)
//   coeff      := INT ("/" INT)?
//
// Factors, by kind of expression:
//   symmetric functions  B[p1,p2,...](^k)?  with B in e h p m s
//   nilHecke elements    xI | dI
//   polynomials          xI(^k)?
//   center elements      b[i,alpha] | cc[i,alpha] | p[i,r]  (each (^k)?)
//   Grassmannian         s[p1,p2,...]
// Factors may be separated by whitespace or "*".
namespace tracecat {

// Restricts every factor to `only` when given.
SymFn parse_sym(std::string_view text, std::optional<Basis> only = std::nullopt);
nh::NHElement parse_nh(int n, std::string_view text);
nh::PolyN parse_poly(int n, std::string_view text);
CenterElement parse_center(const CartanData& cd, const Weight& lambda, std::string_view text);
GrCohElement parse_grass(int k, int n, std::string_view text);

// "x+[i,r]", "x-[i,r]", "xi[i,r]", "1[l1,l2,...]", separated by whitespace or
// "*"; the rightmost generator acts first.
std::vector<CurrentGen> parse_current_word(std::string_view text);

// "[2,-1]" or "2,-1".
Weight parse_weight(std::string_view text);
// "lo..hi" or a single integer.
std::pair<int, int> parse_range(std::string_view text);

}  // namespace tracecat
