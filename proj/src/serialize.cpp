#include "tracecat/serialize.hpp"

#include "tracecat/errors.hpp"
#include "tracecat/parse.hpp"

#include <json.hpp>

namespace tracecat {

using Json = nlohmann::ordered_json;

namespace {

// Joins signed terms as "a - b + c". Each entry is (coefficient, body) with
// an empty body standing for 1.
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    const Rational mag = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + " " + body;
  }
  return out;
}

std::string bracket(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "]";
}

std::string partition_body(char letter, const Partition& mu) {
  if (mu.empty()) return "";
  return letter + bracket(mu.parts());
}

std::string monomial_body(const BubbleMonomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t end = k;
    while (end < m.size() && m[end] == m[k]) ++end;
    if (!out.empty()) out += " ";
    out += "b[" + std::to_string(m[k].node) + "," + std::to_string(m[k].alpha) + "]";
    if (end - k > 1) out += "^" + std::to_string(end - k);
    k = end;
  }
  return out;
}

// --- JSON building ---

Json rational_json(const Rational& r) { return to_string(r); }

Json partition_terms(const Expansion& e) {
  Json terms = Json::array();
  for (const auto& [mu, c] : e)
    terms.push_back({{"partition", mu.parts()}, {"coeff", rational_json(c)}});
  return terms;
}

Json sym_value(const Expansion& e, Basis b) {
  return {{"basis", std::string(basis_name(b))}, {"terms", partition_terms(e)}};
}

Json symn_value(const SymN& f) {
  return {{"n", f.n()}, {"basis", "h"}, {"terms", partition_terms(f.value().terms())}};
}

Json center_value(const CenterElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json gens = Json::array();
    for (const auto& g : m) gens.push_back({{"node", g.node}, {"alpha", g.alpha}});
    terms.push_back({{"gens", gens}, {"coeff", rational_json(c)}});
  }
  return {{"weight", e.weight().values}, {"terms", terms}};
}

// --- JSON reading ---

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto reading(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid value: ") + e.what());
  }
}

Rational read_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("coefficients must be strings \"p/q\" or integers");
}

Partition read_partition(const Json& j) {
  const auto parts = j.get<std::vector<int>>();
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k] <= 0 || (k && parts[k] > parts[k - 1]))
      throw ParseError("partition arrays must be weakly decreasing and positive");
  return Partition(parts);
}

Expansion read_partition_terms(const Json& terms) {
  Expansion e;
  for (const auto& t : terms.at("terms")) {
    const Partition mu = read_partition(t.at("partition"));
    e[mu] += read_rational(t.at("coeff"));
  }
  std::erase_if(e, [](const auto& kv) { return tracecat::is_zero(kv.second); });
  return e;
}

SymFn read_sym(const Json& j) {
  return sym_from_basis(parse_basis(j.at("basis").get<std::string>()), read_partition_terms(j));
}

SymN read_symn(const Json& j) {
  return SymN(j.at("n").get<int>(), read_sym(j));
}

CenterElement read_center(const Json& j) {
  CenterElement e(Weight{j.at("weight").get<std::vector<int>>()});
  for (const auto& t : j.at("terms")) {
    BubbleMonomial m;
    for (const auto& g : t.at("gens")) m.push_back({g.at("node").get<int>(), g.at("alpha").get<int>()});
    for (const auto& g : m)
      if (g.node < 1) throw DomainError("bubble nodes start at 1");
    CenterElement term(e.weight());
    term.add_term(std::move(m), read_rational(t.at("coeff")));
    e += term;
  }
  return e;
}

std::string word_text(const nh::Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += " ";
    out += (l.kind == nh::Letter::Kind::Dot ? "x" : "d") + std::to_string(l.index);
  }
  return out;
}

}  // namespace

// --- text ---

std::string expansion_text(const Expansion& e, Basis basis) {
  const char letter = basis == Basis::schur ? 's' : basis_name(basis)[0];
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [mu, c] : e) terms.emplace_back(c, partition_body(letter, mu));
  return join_terms(terms);
}

std::string sym_text(const SymFn& f) { return expansion_text(f.terms(), Basis::h); }
std::string symn_text(const SymN& f) { return sym_text(f.value()); }

std::string poly_text(const nh::PolyN& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string body;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const int a = it->first[i];
      if (a == 0) continue;
      if (!body.empty()) body += " ";
      body += "x" + std::to_string(i + 1);
      if (a > 1) body += "^" + std::to_string(a);
    }
    terms.emplace_back(it->second, body);
  }
  return join_terms(terms);
}

std::string matrix_text(const nh::NHMatrix& m) {
  std::string out = "basis:";
  for (const auto& a : m.basis()) {
    const std::string t = poly_text(nh::PolyN::monomial(m.n(), a));
    out += " " + t + ";";
  }
  out.back() = '\n';
  for (const auto& row : m.entries()) {
    out += "[";
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? " | " : "") + symn_text(row[c]);
    out += "]\n";
  }
  return out;
}

std::string center_text(const CenterElement& e) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : e.terms()) terms.emplace_back(c, monomial_body(m));
  return join_terms(terms);
}

std::string vector_text(const CenterVector& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  for (const auto& [w, e] : v.components()) out += w.to_string() + ": " + center_text(e) + "\n";
  return out;
}

std::string grass_text(const GrCohElement& g) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [mu, c] : g.terms()) terms.emplace_back(c, partition_body('s', mu));
  return join_terms(terms);
}

std::string slide_text(const std::vector<DottedStrandTerm>& terms) {
  if (terms.empty()) return "0\n";
  std::string out;
  for (const auto& t : terms)
    out += "dots " + std::to_string(t.dots) + " at " + t.coefficient.weight().to_string() + ": " +
           center_text(t.coefficient) + "\n";
  return out;
}

// --- JSON ---

std::string expansion_json(const Expansion& e, Basis basis) { return sym_value(e, basis).dump(); }
std::string sym_json(const SymFn& f) { return sym_value(f.terms(), Basis::h).dump(); }
std::string symn_json(const SymN& f) { return symn_value(f).dump(); }

std::string laurent_json(const LaurentPolyQ& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"exponent", k}, {"coeff", rational_json(c)}});
  return Json{{"variable", "q"}, {"terms", terms}}.dump();
}

std::string poly_json(const nh::PolyN& p) {
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) terms.push_back({{"exponent", a}, {"coeff", rational_json(c)}});
  return Json{{"n", p.n()}, {"terms", terms}}.dump();
}

std::string nh_json(const nh::NHElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"word", word_text(w)}, {"coeff", rational_json(c)}});
  return Json{{"n", e.n()}, {"terms", terms}}.dump();
}

std::string matrix_json(const nh::NHMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(symn_value(x));
    rows.push_back(r);
  }
  return Json{{"n", m.n()}, {"basis", m.basis()}, {"entries", rows}}.dump();
}

std::string center_json(const CenterElement& e) { return center_value(e).dump(); }

std::string vector_json(const CenterVector& v) {
  Json comps = Json::array();
  for (const auto& [w, e] : v.components()) comps.push_back(center_value(e));
  return Json{{"components", comps}}.dump();
}

std::string grass_json(const GrCohElement& g) {
  return Json{{"k", g.k()}, {"n", g.n()}, {"terms", partition_terms(Expansion(g.terms().begin(), g.terms().end()))}}
      .dump();
}

std::string slide_json(const std::vector<DottedStrandTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms)
    out.push_back({{"strand",
                    {{"node", t.strand.node},
                     {"orientation", t.strand.orientation == StrandOrientation::Up ? "up" : "down"},
                     {"direction", t.strand.direction == SlideDirection::RightToLeft
                                       ? "right-to-left"
                                       : "left-to-right"}}},
                   {"dots", t.dots},
                   {"coefficient", center_value(t.coefficient)}});
  return Json{{"terms", out}}.dump();
}

// --- readers ---

SymFn sym_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] { return read_sym(j); });
}

SymN symn_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] { return read_symn(j); });
}

LaurentPolyQ laurent_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    LaurentPolyQ out;
    for (const auto& t : j.at("terms"))
      out += LaurentPolyQ::monomial(t.at("exponent").get<int>(), read_rational(t.at("coeff")));
    return out;
  });
}

nh::PolyN poly_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    nh::PolyN out(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto a = t.at("exponent").get<nh::Exponent>();
      if (static_cast<int>(a.size()) != out.n()) throw ParseError("exponent length must be n");
      for (int x : a)
        if (x < 0) throw ParseError("exponents must be nonnegative");
      out.add_term(a, read_rational(t.at("coeff")));
    }
    return out;
  });
}

nh::NHElement nh_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    const int n = j.at("n").get<int>();
    if (n < 1) throw DomainError("NH_n needs n >= 1");
    nh::NHElement out(n);
    for (const auto& t : j.at("terms")) {
      const std::string word = t.at("word").get<std::string>();
      // Reuse the text grammar for the word itself.
      nh::NHElement w = parse_nh(n, word.empty() ? "1" : word);
      out += read_rational(t.at("coeff")) * w;
    }
    return out;
  });
}

nh::NHMatrix matrix_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    const int n = j.at("n").get<int>();
    std::vector<std::vector<SymN>> entries;
    for (const auto& row : j.at("entries")) {
      std::vector<SymN> r;
      for (const auto& x : row) {
        SymN v = read_symn(x);
        if (v.n() != n) throw ParseError("matrix entries must live in Sym_n");
        r.push_back(std::move(v));
      }
      entries.push_back(std::move(r));
    }
    nh::NHMatrix m(n, std::move(entries));
    if (j.contains("basis") && j.at("basis").get<std::vector<nh::Exponent>>() != m.basis())
      throw ParseError("matrix basis does not match the staircase basis");
    return m;
  });
}

CenterElement center_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] { return read_center(j); });
}

CenterVector vector_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    CenterVector v;
    for (const auto& c : j.at("components")) v.add(read_center(c));
    return v;
  });
}

GrCohElement grass_from_json(std::string_view json) {
  const Json j = parse_json(json);
  return reading([&] {
    GrCohElement g(j.at("k").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) g.add_term(read_partition(t.at("partition")), read_rational(t.at("coeff")));
    return g;
  });
}

}  // namespace tracecat
