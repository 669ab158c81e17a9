#include "tracecat/tracecat.h"

#include "tracecat/bubble.hpp"
#include "tracecat/cartan.hpp"
#include "tracecat/current.hpp"
#include "tracecat/errors.hpp"
#include "tracecat/grassmann.hpp"
#include "tracecat/laurent.hpp"
#include "tracecat/nilhecke.hpp"
#include "tracecat/parse.hpp"
#include "tracecat/serialize.hpp"
#include "tracecat/symfunc.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

using namespace tracecat;
using Json = nlohmann::ordered_json;

struct tc_sym {
  SymFn value;
};
struct tc_nh {
  nh::NHElement value;
};
struct tc_cartan {
  CartanData value;
};
struct tc_center {
  CenterElement value;
};
struct tc_vector {
  CenterVector value;
};
struct tc_grass {
  GrCohElement value;
};

namespace {

thread_local std::string last_error;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
tc_status guarded(F&& f) {
  try {
    f();
    return TC_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return TC_ERR_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return TC_ERR_DOMAIN;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return TC_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TC_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return TC_ERR_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
  return *p;
}

template <class T>
void need_out(T* p) {
  if (!p) throw ArgumentError("output pointer is null");
}

std::string need_text(const char* s, const char* what) {
  if (!s) throw ArgumentError(std::string(what) + " is null");
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool json_format(tc_format f) {
  if (f != TC_TEXT && f != TC_JSON) throw ArgumentError("unknown output format");
  return f == TC_JSON;
}

Weight weight_of(const tc_cartan* cd, const int* weight, std::size_t len) {
  if (!weight && len) throw ArgumentError("weight is null");
  Weight w{std::vector<int>(weight, weight + len)};
  need(cd, "cartan").value.check_weight(w);
  return w;
}

std::string text_line(std::string s) {
  if (s.empty() || s.back() != '\n') s += "\n";
  return s;
}

void check_center_nodes(const CartanData& cd, const CenterElement& e) {
  cd.check_weight(e.weight());
  for (const auto& [m, c] : e.terms())
    for (const auto& g : m) cd.check_node(g.node);
}

// --- reports ---

std::string nh_report(int n, const std::vector<nh::RelationCheck>& checks, bool json) {
  if (json) {
    Json families = Json::object();
    bool all = true;
    for (const auto& c : checks) {
      Json& f = families[c.family];
      if (f.is_null()) f = {{"instances", 0}, {"failures", Json::array()}};
      f["instances"] = f["instances"].get<int>() + 1;
      if (!c.passed) f["failures"].push_back(c.instance);
      all = all && c.passed;
    }
    return Json{{"n", n}, {"families", families}, {"all_passed", all}}.dump() + "\n";
  }
  std::string out;
  int failed = 0;
  for (const auto& c : checks) {
    out += "RELATION " + c.family + " " + c.instance + (c.passed ? " PASS\n" : " FAIL\n");
    failed += !c.passed;
  }
  out += "SUMMARY n=" + std::to_string(n) + " instances=" + std::to_string(checks.size()) +
         " failures=" + std::to_string(failed) + (failed ? " FAIL\n" : " PASS\n");
  return out;
}

std::string current_report(const CurrentReport& r, int n, int wmin, int wmax, int max_degree,
                           bool json) {
  std::map<std::string, std::pair<int, int>> per_axiom;  // instances, failures
  for (const auto& a : r.results) {
    auto& [count, failed] = per_axiom[a.axiom];
    ++count;
    failed += !a.passed();
  }
  if (json) {
    Json axioms = Json::object();
    for (const auto& [axiom, counts] : per_axiom)
      axioms[axiom] = {{"instances", counts.first}, {"failures", Json::array()}};
    for (const auto& a : r.results)
      if (!a.passed())
        axioms[a.axiom]["failures"].push_back({{"instance", a.instance},
                                               {"lambda", a.lambda.values},
                                               {"failed_trials", a.failures}});
    return Json{{"seed", std::to_string(r.seed)},
                {"trials", r.trials},
                {"n", n},
                {"max_degree", max_degree},
                {"weights", std::to_string(wmin) + ".." + std::to_string(wmax)},
                {"axioms", axioms},
                {"all_passed", r.all_passed()}}
               .dump() +
           "\n";
  }
  std::string out = "SEED " + std::to_string(r.seed) + " TRIALS " + std::to_string(r.trials) +
                    " N " + std::to_string(n) + " MAX_DEGREE " + std::to_string(max_degree) +
                    " WEIGHTS " + std::to_string(wmin) + ".." + std::to_string(wmax) + "\n";
  for (const auto& a : r.results)
    out += "AXIOM " + a.axiom + " " + a.instance + " λ=" + a.lambda.to_string() +
           (a.passed() ? " PASS\n" : " FAIL\n");
  for (const auto& [axiom, counts] : per_axiom)
    out += "SUMMARY " + axiom + " instances=" + std::to_string(counts.first) +
           " failures=" + std::to_string(counts.second) + (counts.second ? " FAIL\n" : " PASS\n");
  return out;
}

}  // namespace

extern "C" {

const char* tc_last_error(void) { return last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

// --- symmetric functions ---

tc_status tc_sym_parse(const char* text, const char* only_basis, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    std::optional<Basis> only;
    if (only_basis) only = parse_basis(only_basis);
    *out = new tc_sym{parse_sym(need_text(text, "text"), only)};
  });
}

tc_status tc_sym_from_json(const char* json, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_sym{sym_from_json(need_text(json, "json"))};
  });
}

tc_status tc_sym_add(const tc_sym* a, const tc_sym* b, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_sym{need(a, "a").value + need(b, "b").value};
  });
}

tc_status tc_sym_mul(const tc_sym* a, const tc_sym* b, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_sym{need(a, "a").value * need(b, "b").value};
  });
}

tc_status tc_sym_project(const tc_sym* a, int n, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    if (n < 1) throw DomainError("Sym_n needs n >= 1");
    *out = new tc_sym{project_to_n(need(a, "a").value, n)};
  });
}

tc_status tc_sym_equal(const tc_sym* a, const tc_sym* b, int* equal) {
  return guarded([&] {
    need_out(equal);
    *equal = need(a, "a").value == need(b, "b").value;
  });
}

tc_status tc_sym_format(const tc_sym* a, const char* basis, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const Basis b = parse_basis(basis ? basis : "h");
    const Expansion e = to_basis(need(a, "a").value, b);
    *out = dup(json_format(format) ? expansion_json(e, b) + "\n" : text_line(expansion_text(e, b)));
  });
}

void tc_sym_free(tc_sym* a) { delete a; }

tc_status tc_sym_grassmannian_check(int max_k, int* ok) {
  return guarded([&] {
    need_out(ok);
    if (max_k < 0) throw DomainError("N must be nonnegative");
    *ok = grassmannian_convolution_check(max_k);
  });
}

tc_status tc_quantum_factorial(int n, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    if (n < 0) throw DomainError("n must be nonnegative");
    const LaurentPolyQ p = quantum_factorial(n);
    *out = dup(json_format(format) ? laurent_json(p) + "\n" : text_line(p.to_string()));
  });
}

tc_status tc_gaussian_binomial(int n, int k, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const LaurentPolyQ p = gaussian_binomial(n, k);
    *out = dup(json_format(format) ? laurent_json(p) + "\n" : text_line(p.to_string()));
  });
}

// --- nilHecke ---

tc_status tc_nh_parse(int n, const char* text, tc_nh** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_nh{parse_nh(n, need_text(text, "text"))};
  });
}

tc_status tc_nh_from_json(const char* json, tc_nh** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_nh{nh_from_json(need_text(json, "json"))};
  });
}

tc_status tc_nh_idempotent(int n, tc_nh** out) {
  return guarded([&] {
    need_out(out);
    if (n < 1) throw DomainError("NH_n needs n >= 1");
    *out = new tc_nh{nh::idempotent_e(n)};
  });
}

tc_status tc_nh_compose(const tc_nh* a, const tc_nh* b, tc_nh** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_nh{need(a, "a").value * need(b, "b").value};
  });
}

tc_status tc_nh_equal(const tc_nh* a, const tc_nh* b, int* equal) {
  return guarded([&] {
    need_out(equal);
    *equal = nh::equals(need(a, "a").value, need(b, "b").value);
  });
}

tc_status tc_nh_format(const tc_nh* a, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& e = need(a, "a").value;
    *out = dup(json_format(format) ? nh_json(e) + "\n" : text_line(nh::to_text(e)));
  });
}

tc_status tc_nh_act(const tc_nh* a, const char* polynomial, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& e = need(a, "a").value;
    const nh::PolyN p = nh::act(e, parse_poly(e.n(), need_text(polynomial, "polynomial")));
    *out = dup(json_format(format) ? poly_json(p) + "\n" : text_line(poly_text(p)));
  });
}

tc_status tc_nh_trace(const tc_nh* a, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const SymN t = nh::trace_class(need(a, "a").value);
    *out = dup(json_format(format) ? symn_json(t) + "\n" : text_line(symn_text(t)));
  });
}

tc_status tc_nh_matrix(const tc_nh* a, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const nh::NHMatrix m = nh::to_matrix(need(a, "a").value);
    *out = dup(json_format(format) ? matrix_json(m) + "\n" : matrix_text(m));
  });
}

void tc_nh_free(tc_nh* a) { delete a; }

tc_status tc_nh_basis_class(int n, const int* parts, size_t len, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    if (!parts && len) throw ArgumentError("parts is null");
    if (n < 1) throw DomainError("NH_n needs n >= 1");
    std::vector<int> v(parts, parts + len);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] <= 0 || (k && v[k] > v[k - 1]))
        throw DomainError("lambda must be a partition");
    const SymN c = nh::standard_basis_class(n, Partition(v));
    *out = dup(json_format(format) ? symn_json(c) + "\n" : text_line(symn_text(c)));
  });
}

tc_status tc_nh_verify(int n, tc_format format, char** out, int* all_passed) {
  return guarded([&] {
    need_out(out);
    need_out(all_passed);
    if (n < 1) throw DomainError("NH_n needs n >= 1");
    const auto checks = nh::verify_relations(n);
    bool all = true;
    for (const auto& c : checks) all = all && c.passed;
    *out = dup(nh_report(n, checks, json_format(format)));
    *all_passed = all;
  });
}

// --- Cartan data ---

tc_status tc_cartan_new(int n, tc_cartan** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_cartan{CartanData(n)};
  });
}

tc_status tc_cartan_set_t(tc_cartan* cd, int i, int j, const char* value) {
  return guarded([&] {
    if (!cd) throw ArgumentError("cartan is null");
    cd->value.set_t(i, j, parse_rational(need_text(value, "value")));
  });
}

tc_status tc_cartan_gate_ok(const tc_cartan* cd, int* ok) {
  return guarded([&] {
    need_out(ok);
    *ok = need(cd, "cartan").value.current_gate_ok();
  });
}

void tc_cartan_free(tc_cartan* cd) { delete cd; }

// --- center ---

tc_status tc_center_parse(const tc_cartan* cd, const int* weight, size_t len, const char* text,
                          tc_center** out) {
  return guarded([&] {
    need_out(out);
    const Weight w = weight_of(cd, weight, len);
    *out = new tc_center{parse_center(cd->value, w, need_text(text, "text"))};
  });
}

tc_status tc_center_from_json(const tc_cartan* cd, const char* json, tc_center** out) {
  return guarded([&] {
    need_out(out);
    CenterElement e = center_from_json(need_text(json, "json"));
    check_center_nodes(need(cd, "cartan").value, e);
    *out = new tc_center{std::move(e)};
  });
}

tc_status tc_center_equal(const tc_center* a, const tc_center* b, int* equal) {
  return guarded([&] {
    need_out(equal);
    *equal = need(a, "a").value == need(b, "b").value;
  });
}

tc_status tc_center_format(const tc_center* a, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& e = need(a, "a").value;
    *out = dup(json_format(format) ? center_json(e) + "\n"
                                   : text_line(e.weight().to_string() + ": " + center_text(e)));
  });
}

tc_status tc_center_to_sym(const tc_center* a, int node, tc_sym** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_sym{to_sym(need(a, "a").value, node)};
  });
}

void tc_center_free(tc_center* a) { delete a; }

tc_status tc_bubble_cc(const tc_cartan* cd, int node, int alpha, const int* weight, size_t len,
                       tc_center** out) {
  return guarded([&] {
    need_out(out);
    const Weight w = weight_of(cd, weight, len);
    *out = new tc_center{cc_bubble(cd->value, node, alpha, w)};
  });
}

tc_status tc_bubble_absolute(const tc_cartan* cd, int node, int counterclockwise, int dots,
                             const int* weight, size_t len, tc_center** out) {
  return guarded([&] {
    need_out(out);
    const Weight w = weight_of(cd, weight, len);
    if (dots < 0) throw DomainError("dot count must be nonnegative");
    const Orientation o = counterclockwise ? Orientation::Counterclockwise : Orientation::Clockwise;
    *out = new tc_center{from_absolute(cd->value, node, o, dots, w)};
  });
}

tc_status tc_bubble_power_sum(const tc_cartan* cd, int node, int r, const int* weight,
                              size_t len, tc_power_formula formula, tc_center** out) {
  return guarded([&] {
    need_out(out);
    const Weight w = weight_of(cd, weight, len);
    if (r < 0) throw DomainError("r must be nonnegative");
    switch (formula) {
      case TC_POWER_DEFAULT:
        *out = new tc_center{power_sum(cd->value, node, r, w)};
        return;
      case TC_POWER_WEIGHTED_CW:
      case TC_POWER_WEIGHTED_CCW:
      case TC_POWER_DERIVATIVE: {
        if (r < 1) throw DomainError("the bubble formulas need r >= 1");
        const PowerSumFormula f = formula == TC_POWER_WEIGHTED_CW ? PowerSumFormula::WeightedClockwise
                                  : formula == TC_POWER_WEIGHTED_CCW
                                      ? PowerSumFormula::WeightedCounterclockwise
                                      : PowerSumFormula::Derivative;
        *out = new tc_center{power_sum_formula(cd->value, node, r, w, f)};
        return;
      }
    }
    throw ArgumentError("unknown power-sum formula");
  });
}

tc_status tc_bubble_slide(const tc_cartan* cd, const tc_center* e, int strand_node, int up,
                          int left_to_right, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const CartanData& c = need(cd, "cartan").value;
    const CenterElement& x = need(e, "element").value;
    check_center_nodes(c, x);
    c.check_node(strand_node);
    const Strand s{strand_node, up ? StrandOrientation::Up : StrandOrientation::Down,
                   left_to_right ? SlideDirection::LeftToRight : SlideDirection::RightToLeft};
    const auto terms = slide_center_past_strand(c, x, s);
    *out = dup(json_format(format) ? slide_json(terms) + "\n" : slide_text(terms));
  });
}

tc_status tc_bubble_power_slide_check(const tc_cartan* cd, int i, int j, int r,
                                      const int* weight, size_t len, int* ok) {
  return guarded([&] {
    need_out(ok);
    const Weight w = weight_of(cd, weight, len);
    if (r < 0) throw DomainError("r must be nonnegative");
    *ok = power_slide_check(cd->value, i, j, r, w);
  });
}

tc_status tc_bubble_grassmannian_check(const tc_cartan* cd, int node, int alpha_max,
                                       const int* weight, size_t len, int* ok) {
  return guarded([&] {
    need_out(ok);
    const Weight w = weight_of(cd, weight, len);
    *ok = infinite_grassmannian_check(cd->value, node, alpha_max, w);
  });
}

// --- current algebra ---

tc_status tc_vector_from_center(const tc_center* e, tc_vector** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_vector{CenterVector(need(e, "element").value)};
  });
}

tc_status tc_vector_from_json(const tc_cartan* cd, const char* json, tc_vector** out) {
  return guarded([&] {
    need_out(out);
    CenterVector v = vector_from_json(need_text(json, "json"));
    for (const auto& [w, e] : v.components()) check_center_nodes(need(cd, "cartan").value, e);
    *out = new tc_vector{std::move(v)};
  });
}

tc_status tc_vector_equal(const tc_vector* a, const tc_vector* b, int* equal) {
  return guarded([&] {
    need_out(equal);
    *equal = need(a, "a").value == need(b, "b").value;
  });
}

tc_status tc_vector_format(const tc_vector* v, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& x = need(v, "vector").value;
    *out = dup(json_format(format) ? vector_json(x) + "\n" : vector_text(x));
  });
}

void tc_vector_free(tc_vector* v) { delete v; }

tc_status tc_current_act(const tc_cartan* cd, const char* word, const tc_vector* v,
                         tc_vector** out) {
  return guarded([&] {
    need_out(out);
    const auto gens = parse_current_word(need_text(word, "word"));
    *out = new tc_vector{act_word(need(cd, "cartan").value, gens, need(v, "vector").value)};
  });
}

tc_status tc_current_verify(const tc_cartan* cd, int wmin, int wmax, int max_degree, int trials,
                            uint64_t seed, int threads, tc_format format, char** out,
                            int* all_passed) {
  return guarded([&] {
    need_out(out);
    need_out(all_passed);
    const CartanData& c = need(cd, "cartan").value;
    const CurrentReport r =
        verify_current_relations(c, wmin, wmax, max_degree, trials, seed, threads);
    *out = dup(current_report(r, c.n(), wmin, wmax, max_degree, json_format(format)));
    *all_passed = r.all_passed();
  });
}

tc_status tc_current_sl2_check(int r, int s, int wmin, int wmax, int trials, uint64_t seed,
                               int* ok) {
  return guarded([&] {
    need_out(ok);
    if (trials < 0) throw DomainError("trials must be nonnegative");
    *ok = sl2_commutator_check(r, s, wmin, wmax, trials, seed);
  });
}

tc_status tc_current_calibration(tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto passing = passing_closures();
    auto name = [](const ClosureConvention& c) {
      return std::string(c.e_loop == Orientation::Clockwise ? "clockwise" : "counterclockwise") +
             (c.read_outside ? " outside" : " inside");
    };
    if (json_format(format)) {
      Json list = Json::array();
      for (const auto& c : passing)
        list.push_back({{"e_loop", c.e_loop == Orientation::Clockwise ? "clockwise" : "counterclockwise"},
                        {"read_at", c.read_outside ? "outside" : "inside"}});
      *out = dup(Json{{"candidates", 4}, {"passing", list}}.dump() + "\n");
      return;
    }
    std::string text = "CANDIDATES 4 PASSING " + std::to_string(passing.size()) + "\n";
    for (const auto& c : passing) text += "E loop " + name(c) + "\n";
    *out = dup(text);
  });
}

// --- Grassmannian ---

tc_status tc_grass_parse(int k, int n, const char* text, tc_grass** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_grass{parse_grass(k, n, need_text(text, "text"))};
  });
}

tc_status tc_grass_from_json(const char* json, tc_grass** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_grass{grass_from_json(need_text(json, "json"))};
  });
}

tc_status tc_grass_mul(const tc_grass* a, const tc_grass* b, tc_grass** out) {
  return guarded([&] {
    need_out(out);
    *out = new tc_grass{gr_mul(need(a, "a").value, need(b, "b").value)};
  });
}

tc_status tc_grass_equal(const tc_grass* a, const tc_grass* b, int* equal) {
  return guarded([&] {
    need_out(equal);
    *equal = need(a, "a").value == need(b, "b").value;
  });
}

tc_status tc_grass_format(const tc_grass* a, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& g = need(a, "a").value;
    *out = dup(json_format(format) ? grass_json(g) + "\n" : text_line(grass_text(g)));
  });
}

void tc_grass_free(tc_grass* a) { delete a; }

tc_status tc_grass_dimension(int k, int n, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const LaurentPolyQ p = graded_dimension(k, n);
    *out = dup(json_format(format) ? laurent_json(p) + "\n" : text_line(p.to_string()));
  });
}

tc_status tc_grass_relations(int k, int n, int alpha_max, int* ok) {
  return guarded([&] {
    need_out(ok);
    *ok = ideal_relation_check(k, n, alpha_max);
  });
}

tc_status tc_grass_chern(int k, int n, tc_format format, char** out) {
  return guarded([&] {
    need_out(out);
    const ChernReport r = chern_character_report(k, n);
    const bool surjective = r.cokernel_rank == 0;
    if (json_format(format)) {
      *out = dup(Json{{"k", r.k},
                      {"n", r.n},
                      {"dimension", r.dimension},
                      {"image_rank", r.image_rank},
                      {"cokernel_rank", r.cokernel_rank},
                      {"surjective", surjective},
                      {"trivially_surjective", r.trivially_surjective}}
                     .dump() +
                 "\n");
      return;
    }
    std::string text = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") dimension " +
                       std::to_string(r.dimension) + " image rank " +
                       std::to_string(r.image_rank) + " cokernel rank " +
                       std::to_string(r.cokernel_rank);
    text += r.trivially_surjective ? " surjective (trivial)\n"
            : surjective           ? " surjective\n"
                                   : " not surjective\n";
    *out = dup(text);
  });
}

}  // extern "C"
