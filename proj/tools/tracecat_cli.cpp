// tracecat command line front end. Uses only the C interface.
#include "tracecat/tracecat.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kFailed = 3 };

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

void check(tc_status s) {
  if (s == TC_OK) return;
  throw CliError(s == TC_ERR_DOMAIN ? kDomain : kUsage, tc_last_error());
}

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Sym = std::unique_ptr<tc_sym, Deleter<tc_sym, tc_sym_free>>;
using Nh = std::unique_ptr<tc_nh, Deleter<tc_nh, tc_nh_free>>;
using Cartan = std::unique_ptr<tc_cartan, Deleter<tc_cartan, tc_cartan_free>>;
using Center = std::unique_ptr<tc_center, Deleter<tc_center, tc_center_free>>;
using Vec = std::unique_ptr<tc_vector, Deleter<tc_vector, tc_vector_free>>;
using Grass = std::unique_ptr<tc_grass, Deleter<tc_grass, tc_grass_free>>;

template <class H, class F, class... A>
H make(F f, A... args) {
  typename H::pointer p = nullptr;
  check(f(args..., &p));
  return H(p);
}

std::string take(char* s) {
  std::string out(s);
  tc_string_free(s);
  return out;
}

template <class F, class... A>
std::string text_of(F f, A... args) {
  char* s = nullptr;
  check(f(args..., &s));
  return take(s);
}

int parse_int(std::string_view t) {
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw CliError(kUsage, "not an integer: '" + std::string(t) + "'");
  return v;
}

std::vector<int> parse_list(std::string t) {
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw CliError(kUsage, "unbalanced brackets in '" + t + "'");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<int> out;
  if (t.find_first_not_of(' ') == std::string::npos) return out;
  std::stringstream ss(t);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_int(item));
  return out;
}

std::pair<int, int> parse_range(const std::string& t) {
  const auto dots = t.find("..", 1);
  if (dots == std::string::npos) {
    const int v = parse_int(t);
    return {v, v};
  }
  const int lo = parse_int(t.substr(0, dots)), hi = parse_int(t.substr(dots + 2));
  if (lo > hi) throw CliError(kUsage, "empty range '" + t + "'");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kUsage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

struct Options {
  std::string output = "text";
  tc_format format() const { return output == "json" ? TC_JSON : TC_TEXT; }
};

// One input, either inline text or a file holding text or JSON.
struct Input {
  std::string expr, file;
  bool json = false;

  void add(CLI::App* app, const std::string& what = "expression") {
    auto* e = app->add_option("--expr", expr, "Inline " + what);
    auto* f = app->add_option("--file", file, "File holding the " + what + " (text or JSON)");
    e->excludes(f);
    f->excludes(e);
  }
  void resolve() {
    if (expr.empty() == file.empty()) throw CliError(kUsage, "give exactly one of --expr, --file");
    if (!file.empty()) {
      expr = read_file(file);
      json = looks_like_json(expr);
    }
  }
};

struct CartanOpts {
  int n = 2;
  std::vector<std::string> scalars;

  void add(CLI::App* app) {
    app->add_option("--n", n, "Rank: sl_n")->required();
    app->add_option("--t", scalars, "Scalar t_ij as 'i,j=value' (repeatable)");
  }
  Cartan build() const {
    Cartan cd = make<Cartan>(tc_cartan_new, n);
    for (const auto& s : scalars) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw CliError(kUsage, "expected i,j=value in '" + s + "'");
      const auto ij = parse_list(s.substr(0, eq));
      if (ij.size() != 2) throw CliError(kUsage, "expected i,j=value in '" + s + "'");
      check(tc_cartan_set_t(cd.get(), ij[0], ij[1], s.substr(eq + 1).c_str()));
    }
    return cd;
  }
};

std::vector<std::vector<int>> weight_box(int nodes, std::pair<int, int> range) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < nodes; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int x = range.first; x <= range.second; ++x) {
        next.push_back(w);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::string weight_string(const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + "]";
}

// Weight given by --weight, or every weight of the --weights box.
struct WeightOpts {
  std::string single, box;

  void add(CLI::App* app, bool allow_box) {
    auto* s = app->add_option("--weight", single, "Weight, e.g. '[2,-1]'");
    if (allow_box) {
      auto* b = app->add_option("--weights", box, "Every weight with entries in lo..hi");
      s->excludes(b);
      b->excludes(s);
    } else {
      s->required();
    }
  }
  std::vector<std::vector<int>> resolve(int n) const {
    if (!single.empty()) return {parse_list(single)};
    if (box.empty()) throw CliError(kUsage, "give --weight or --weights");
    return weight_box(n - 1, parse_range(box));
  }
};

struct Check {
  std::string name;
  bool passed;
};

int report_checks(const Options& o, const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (o.format() == TC_JSON) {
    std::string s = "{\"checks\":[";
    for (std::size_t k = 0; k < checks.size(); ++k)
      s += std::string(k ? "," : "") + "{\"check\":\"" + checks[k].name + "\",\"passed\":" +
           (checks[k].passed ? "true" : "false") + "}";
    std::cout << s << "],\"all_passed\":" << (all ? "true" : "false") << "}\n";
  } else {
    for (const auto& c : checks) std::cout << "CHECK " << c.name << (c.passed ? " PASS\n" : " FAIL\n");
  }
  return all ? kOk : kFailed;
}

// --- sym ---

Sym read_sym(Input& in, const std::string& only) {
  in.resolve();
  if (in.json) return make<Sym>(tc_sym_from_json, in.expr.c_str());
  return make<Sym>(tc_sym_parse, in.expr.c_str(), only.empty() ? nullptr : only.c_str());
}

std::string sym_out(const Sym& s, const std::string& basis, const Options& o) {
  return text_of(tc_sym_format, s.get(), basis.c_str(), o.format());
}

struct SymCommands {
  Input input;
  std::vector<std::string> factors;
  std::string from, to = "h";
  int n = 0, max_k = 6, k = 0;

  void add(CLI::App& app, Options& o) {
    auto* sym = app.add_subcommand("sym", "Symmetric functions")->require_subcommand(1);

    auto* convert = sym->add_subcommand("convert", "Change of basis");
    input.add(convert);
    convert->add_option("--from", from, "Basis of every input factor")
        ->check(CLI::IsMember({"e", "h", "p", "m", "s"}));
    convert->add_option("--to", to, "Output basis")->check(CLI::IsMember({"e", "h", "p", "m", "s"}));
    convert->add_option("--n", n, "Project to Sym_n first")->check(CLI::PositiveNumber);
    convert->final_callback([this, &o] {
      Sym f = read_sym(input, from);
      if (n > 0) f = make<Sym>(tc_sym_project, f.get(), n);
      std::cout << sym_out(f, to, o);
    });

    auto* mul = sym->add_subcommand("mul", "Product of expressions");
    mul->add_option("--expr", factors, "Factor (repeatable)")->required();
    mul->add_option("--to", to, "Output basis")->check(CLI::IsMember({"e", "h", "p", "m", "s"}));
    mul->add_option("--n", n, "Project to Sym_n")->check(CLI::PositiveNumber);
    mul->final_callback([this, &o] {
      Sym acc = make<Sym>(tc_sym_parse, "1", nullptr);
      for (const auto& f : factors) {
        Sym x = make<Sym>(tc_sym_parse, f.c_str(), nullptr);
        acc = make<Sym>(tc_sym_mul, acc.get(), x.get());
      }
      if (n > 0) acc = make<Sym>(tc_sym_project, acc.get(), n);
      std::cout << sym_out(acc, to, o);
    });

    auto* grass = sym->add_subcommand("grass-check", "Sum of (-1)^j e_j h_(k-j) vanishes for 1 <= k <= N");
    grass->add_option("--max-k", max_k, "N")->check(CLI::NonNegativeNumber);
    grass->final_callback([this, &o] {
      int ok = 0;
      check(tc_sym_grassmannian_check(max_k, &ok));
      throw CliError(report_checks(o, {{"grassmannian max_k=" + std::to_string(max_k), ok != 0}}), "");
    });

    auto* gauss = sym->add_subcommand("gaussian", "Gaussian binomial in q^2");
    gauss->add_option("--n", n)->required();
    gauss->add_option("--k", k)->required();
    gauss->final_callback([this, &o] { std::cout << text_of(tc_gaussian_binomial, n, k, o.format()); });

    auto* qf = sym->add_subcommand("qfactorial", "Quantum factorial in q^2");
    qf->add_option("--n", n)->required();
    qf->final_callback([this, &o] { std::cout << text_of(tc_quantum_factorial, n, o.format()); });
  }
};

// --- nh ---

struct NhCommands {
  Input input;
  int n = 2;
  std::string poly, partition;

  Nh read() {
    input.resolve();
    if (input.json) return make<Nh>(tc_nh_from_json, input.expr.c_str());
    return make<Nh>(tc_nh_parse, n, input.expr.c_str());
  }

  void add(CLI::App& app, Options& o) {
    auto* nh = app.add_subcommand("nh", "NilHecke algebra")->require_subcommand(1);

    auto element_command = [&](const char* name, const char* help) {
      auto* c = nh->add_subcommand(name, help);
      c->add_option("--n", n, "NH_n")->required()->check(CLI::PositiveNumber);
      input.add(c, "nilHecke element");
      return c;
    };

    element_command("trace", "Trace class in Sym_n")->final_callback([this, &o] {
      Nh e = read();
      std::cout << text_of(tc_nh_trace, e.get(), o.format());
    });
    element_command("matrix", "Matrix over Sym_n in the staircase basis")->final_callback([this, &o] {
      Nh e = read();
      std::cout << text_of(tc_nh_matrix, e.get(), o.format());
    });
    auto* act = element_command("act", "Action on a polynomial");
    act->add_option("--poly", poly, "Polynomial in x1..xn")->required();
    act->final_callback([this, &o] {
      Nh e = read();
      std::cout << text_of(tc_nh_act, e.get(), poly.c_str(), o.format());
    });

    auto* verify = nh->add_subcommand("verify", "Check the defining relations");
    verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    verify->final_callback([this, &o] {
      char* s = nullptr;
      int ok = 0;
      check(tc_nh_verify(n, o.format(), &s, &ok));
      std::cout << take(s);
      if (!ok) throw CliError(kFailed, "");
    });

    auto* idem = nh->add_subcommand("idempotent", "The idempotent x^delta d_w0");
    idem->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    idem->final_callback([this, &o] {
      Nh e = make<Nh>(tc_nh_idempotent, n);
      std::cout << text_of(tc_nh_format, e.get(), o.format());
    });

    auto* basis = nh->add_subcommand("basis-class", "Trace class of a standard basis element");
    basis->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    basis->add_option("--partition", partition, "Partition, e.g. '2,1'")->required();
    basis->final_callback([this, &o] {
      const auto parts = parse_list(partition);
      std::cout << text_of(tc_nh_basis_class, n, parts.data(), parts.size(), o.format());
    });
  }
};

// --- bubble ---

struct BubbleCommands {
  CartanOpts cartan;
  WeightOpts weight;
  Input input;
  int node = 1, alpha = 1, dots = 0, r = 1, i = 1, j = 1, strand_node = 1, alpha_max = 8;
  std::string orientation = "cw", formula = "default", strand = "up", direction = "left-to-right";

  void add(CLI::App& app, Options& o) {
    auto* bubble = app.add_subcommand("bubble", "Bubble calculus in Z(lambda)")->require_subcommand(1);

    auto* cc = bubble->add_subcommand("cc", "Counterclockwise bubble in the clockwise generators");
    cartan.add(cc);
    weight.add(cc, false);
    cc->add_option("--node", node)->required();
    cc->add_option("--alpha", alpha)->required();
    cc->final_callback([this, &o] {
      Cartan cd = cartan.build();
      const auto w = weight.resolve(cartan.n).front();
      Center e = make<Center>(tc_bubble_cc, cd.get(), node, alpha, w.data(), w.size());
      std::cout << text_of(tc_center_format, e.get(), o.format());
    });

    auto* abs = bubble->add_subcommand("absolute", "Bubble with an absolute dot count");
    cartan.add(abs);
    weight.add(abs, false);
    abs->add_option("--node", node)->required();
    abs->add_option("--orientation", orientation)->check(CLI::IsMember({"cw", "ccw"}));
    abs->add_option("--dots", dots)->required();
    abs->final_callback([this, &o] {
      Cartan cd = cartan.build();
      const auto w = weight.resolve(cartan.n).front();
      Center e = make<Center>(tc_bubble_absolute, cd.get(), node, orientation == "ccw" ? 1 : 0, dots,
                              w.data(), w.size());
      std::cout << text_of(tc_center_format, e.get(), o.format());
    });

    auto* ps = bubble->add_subcommand("power-sum", "Power-sum element p_{i,r}");
    cartan.add(ps);
    weight.add(ps, false);
    ps->add_option("--node", node)->required();
    ps->add_option("--r", r)->required();
    ps->add_option("--formula", formula)->check(CLI::IsMember({"default", "cw", "ccw", "derivative"}));
    ps->final_callback([this, &o] {
      Cartan cd = cartan.build();
      const auto w = weight.resolve(cartan.n).front();
      const tc_power_formula f = formula == "cw"           ? TC_POWER_WEIGHTED_CW
                                 : formula == "ccw"        ? TC_POWER_WEIGHTED_CCW
                                 : formula == "derivative" ? TC_POWER_DERIVATIVE
                                                           : TC_POWER_DEFAULT;
      Center e = make<Center>(tc_bubble_power_sum, cd.get(), node, r, w.data(), w.size(), f);
      std::cout << text_of(tc_center_format, e.get(), o.format());
    });

    auto* slide = bubble->add_subcommand("slide", "Slide a center element across a strand");
    cartan.add(slide);
    weight.add(slide, false);
    input.add(slide, "center element");
    slide->add_option("--strand-node", strand_node)->required();
    slide->add_option("--strand", strand)->check(CLI::IsMember({"up", "down"}));
    slide->add_option("--direction", direction)->check(CLI::IsMember({"left-to-right", "right-to-left"}));
    slide->final_callback([this, &o] {
      Cartan cd = cartan.build();
      Center e = read_center(cd);
      std::cout << text_of(tc_bubble_slide, cd.get(), e.get(), strand_node, strand == "up" ? 1 : 0,
                           direction == "left-to-right" ? 1 : 0, o.format());
    });

    auto* psc = bubble->add_subcommand("power-slide-check", "Power sums slide past a strand");
    cartan.add(psc);
    weight.add(psc, true);
    psc->add_option("--i", i)->required();
    psc->add_option("--j", j)->required();
    psc->add_option("--r", r)->required();
    psc->final_callback([this, &o] {
      Cartan cd = cartan.build();
      std::vector<Check> checks;
      for (const auto& w : weight.resolve(cartan.n)) {
        int ok = 0;
        check(tc_bubble_power_slide_check(cd.get(), i, j, r, w.data(), w.size(), &ok));
        checks.push_back({"power-slide i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " r=" + std::to_string(r) + " lambda=" + weight_string(w),
                          ok != 0});
      }
      throw CliError(report_checks(o, checks), "");
    });

    auto* grass = bubble->add_subcommand("grassmannian", "Infinite Grassmannian relation");
    cartan.add(grass);
    weight.add(grass, true);
    grass->add_option("--node", node)->required();
    grass->add_option("--alpha-max", alpha_max);
    grass->final_callback([this, &o] {
      Cartan cd = cartan.build();
      std::vector<Check> checks;
      for (const auto& w : weight.resolve(cartan.n)) {
        int ok = 0;
        check(tc_bubble_grassmannian_check(cd.get(), node, alpha_max, w.data(), w.size(), &ok));
        checks.push_back({"grassmannian node=" + std::to_string(node) + " lambda=" + weight_string(w),
                          ok != 0});
      }
      throw CliError(report_checks(o, checks), "");
    });
  }

  Center read_center(const Cartan& cd) {
    input.resolve();
    if (input.json) return make<Center>(tc_center_from_json, cd.get(), input.expr.c_str());
    const auto w = weight.resolve(cartan.n).front();
    return make<Center>(tc_center_parse, cd.get(), w.data(), w.size(), input.expr.c_str());
  }
};

// --- current ---

struct CurrentCommands {
  CartanOpts cartan;
  WeightOpts weight;
  Input input;
  std::string word, weights = "-3..3";
  int max_degree = 3, trials = 5, threads = 1, r = 0, s = 0;
  std::uint64_t seed = 0;

  void add(CLI::App& app, Options& o) {
    auto* current = app.add_subcommand("current", "Current algebra action on centers")->require_subcommand(1);

    auto* act = current->add_subcommand("act", "Apply a word of generators");
    cartan.add(act);
    act->add_option("--weight", weight.single, "Weight of an --expr input");
    input.add(act, "center element or JSON vector");
    act->add_option("--word", word, "Generators, rightmost first, e.g. 'x+[1,0] x-[1,1]'")->required();
    act->final_callback([this, &o] {
      Cartan cd = cartan.build();
      input.resolve();
      Vec v;
      if (input.json) {
        v = make<Vec>(tc_vector_from_json, cd.get(), input.expr.c_str());
      } else {
        if (weight.single.empty()) throw CliError(kUsage, "--expr needs --weight");
        const auto w = parse_list(weight.single);
        Center e = make<Center>(tc_center_parse, cd.get(), w.data(), w.size(), input.expr.c_str());
        v = make<Vec>(tc_vector_from_center, e.get());
      }
      Vec out = make<Vec>(tc_current_act, cd.get(), word.c_str(), v.get());
      std::cout << text_of(tc_vector_format, out.get(), o.format());
    });

    auto* verify = current->add_subcommand("verify", "Check the current-algebra relations");
    cartan.add(verify);
    verify->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    verify->add_option("--weights", weights, "Entries of lambda in lo..hi");
    verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed)->required();
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
    verify->final_callback([this, &o] {
      Cartan cd = cartan.build();
      const auto [lo, hi] = parse_range(weights);
      char* text = nullptr;
      int ok = 0;
      check(tc_current_verify(cd.get(), lo, hi, max_degree, trials, seed, threads, o.format(), &text, &ok));
      std::cout << take(text);
      if (!ok) throw CliError(kFailed, "");
    });

    auto* sl2 = current->add_subcommand("sl2-check", "[x+_r, x-_s] = xi_(r+s) for sl_2");
    sl2->add_option("--r", r)->required();
    sl2->add_option("--s", s)->required();
    sl2->add_option("--weights", weights, "lambda in lo..hi");
    sl2->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    sl2->add_option("--seed", seed)->required();
    sl2->final_callback([this, &o] {
      const auto [lo, hi] = parse_range(weights);
      int ok = 0;
      check(tc_current_sl2_check(r, s, lo, hi, trials, seed, &ok));
      throw CliError(report_checks(o, {{"sl2 r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                            " lambda=" + std::to_string(lo) + ".." + std::to_string(hi),
                                        ok != 0}}),
                     "");
    });

    auto* cal = current->add_subcommand("calibration", "Closure conventions that pass calibration");
    cal->final_callback([&o] { std::cout << text_of(tc_current_calibration, o.format()); });
  }
};

// --- grass ---

struct GrassCommands {
  int k = 1, n = 2, alpha_max = -1;
  std::vector<std::string> factors;

  void add_box(CLI::App* c) {
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
  }

  void add(CLI::App& app, Options& o) {
    auto* grass = app.add_subcommand("grass", "Cohomology of Gr(k,n)")->require_subcommand(1);

    auto* dim = grass->add_subcommand("dim", "Graded dimension");
    add_box(dim);
    dim->final_callback([this, &o] { std::cout << text_of(tc_grass_dimension, k, n, o.format()); });

    auto* rel = grass->add_subcommand("relations", "Bubble relations hold in H*(Gr(k,n))");
    add_box(rel);
    rel->add_option("--alpha-max", alpha_max, "Default n");
    rel->final_callback([this, &o] {
      const int a = alpha_max < 0 ? n : alpha_max;
      int ok = 0;
      check(tc_grass_relations(k, n, a, &ok));
      throw CliError(report_checks(o, {{"relations k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                            " alpha_max=" + std::to_string(a),
                                        ok != 0}}),
                     "");
    });

    auto* chern = grass->add_subcommand("chern", "Image of the Chern character map");
    add_box(chern);
    chern->final_callback([this, &o] { std::cout << text_of(tc_grass_chern, k, n, o.format()); });

    auto* mul = grass->add_subcommand("mul", "Product of Schur classes");
    add_box(mul);
    mul->add_option("--expr", factors, "Factor (repeatable)")->required();
    mul->final_callback([this, &o] {
      Grass acc = make<Grass>(tc_grass_parse, k, n, "1");
      for (const auto& f : factors) {
        Grass x = make<Grass>(tc_grass_parse, k, n, f.c_str());
        acc = make<Grass>(tc_grass_mul, acc.get(), x.get());
      }
      std::cout << text_of(tc_grass_format, acc.get(), o.format());
    });
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with nilHecke traces, bubbles and current algebras", "tracecat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  SymCommands sym;
  NhCommands nh;
  BubbleCommands bubble;
  CurrentCommands current;
  GrassCommands grass;
  sym.add(app, opts);
  nh.add(app, opts);
  bubble.add(app, opts);
  current.add(app, opts);
  grass.add(app, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tracecat: " << e.what() << "\n";
    return kUsage;
  } catch (const CliError& e) {
    std::cout.flush();
    if (*e.what()) std::cerr << "tracecat: " << e.what() << "\n";
    return e.code;
  }
  return kOk;
}
