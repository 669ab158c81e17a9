#pragma once

#include "tracecat/bubble.hpp"
#include "tracecat/current.hpp"
#include "tracecat/grassmann.hpp"
#include "tracecat/laurent.hpp"
#include "tracecat/nilhecke.hpp"
#include "tracecat/symfunc.hpp"

#include <string>
#include <string_view>
#include <vector>

// Text and JSON forms of the value types. Rationals are always written as
// "p/q" or "p" strings. Every JSON form has a matching reader, which throws
// ParseError on malformed input.
namespace tracecat {

std::string expansion_text(const Expansion& e, Basis basis);  // "2 h[2] - h[1,1]"
std::string sym_text(const SymFn& f);                          // h basis
std::string symn_text(const SymN& f);
std::string poly_text(const nh::PolyN& p);                     // "x1^2 x2 - 3"
std::string matrix_text(const nh::NHMatrix& m);
std::string center_text(const CenterElement& e);               // "b[1,1]^2 - b[1,2]"
std::string vector_text(const CenterVector& v);                // one "[w]: ..." line each
std::string grass_text(const GrCohElement& g);                 // "s[2] + s[1,1]"
std::string slide_text(const std::vector<DottedStrandTerm>& terms);

std::string expansion_json(const Expansion& e, Basis basis);
std::string sym_json(const SymFn& f);
std::string symn_json(const SymN& f);
std::string laurent_json(const LaurentPolyQ& p);
std::string poly_json(const nh::PolyN& p);
std::string nh_json(const nh::NHElement& e);
std::string matrix_json(const nh::NHMatrix& m);
std::string center_json(const CenterElement& e);
std::string vector_json(const CenterVector& v);
std::string grass_json(const GrCohElement& g);
std::string slide_json(const std::vector<DottedStrandTerm>& terms);

// Any basis tag is accepted; the result is the h-basis representative.
SymFn sym_from_json(std::string_view json);
SymN symn_from_json(std::string_view json);
LaurentPolyQ laurent_from_json(std::string_view json);
nh::PolyN poly_from_json(std::string_view json);
nh::NHElement nh_from_json(std::string_view json);
nh::NHMatrix matrix_from_json(std::string_view json);
CenterElement center_from_json(std::string_view json);
CenterVector vector_from_json(std::string_view json);
GrCohElement grass_from_json(std::string_view json);

}  // namespace tracecat
