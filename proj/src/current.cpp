#include "tracecat/current.hpp"

#include "tracecat/errors.hpp"

#include "current_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace tracecat {

// --- CenterVector -----------------------------------------------------------

void CenterVector::add(const CenterElement& e) {
  if (e.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(e.weight(), e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) components_.erase(it);
  }
}

CenterVector& CenterVector::operator+=(const CenterVector& o) {
  for (const auto& [w, e] : o.components_) add(e);
  return *this;
}

CenterVector& CenterVector::operator-=(const CenterVector& o) {
  for (const auto& [w, e] : o.components_) add(Rational(-1) * e);
  return *this;
}

CenterVector& CenterVector::operator*=(const Rational& c) {
  if (tracecat::is_zero(c)) components_.clear();
  for (auto& [w, e] : components_) e *= c;
  return *this;
}

std::string CurrentGen::to_string() const {
  switch (kind) {
    case Kind::XPlus:
      return "x+[" + std::to_string(node) + "," + std::to_string(degree) + "]";
    case Kind::XMinus:
      return "x-[" + std::to_string(node) + "," + std::to_string(degree) + "]";
    case Kind::Xi:
      return "xi[" + std::to_string(node) + "," + std::to_string(degree) + "]";
    case Kind::Idem:
      break;
  }
  std::string w = weight.to_string();
  return "1[" + w.substr(1);
}

// --- encircling -------------------------------------------------------------

namespace {

using engine::opposite;

}  // namespace

CenterElement encircle(const CartanData& cd, int i, bool up, int dots, const CenterElement& f,
                       const ClosureConvention& closure) {
  const Strand strand{i, up ? StrandOrientation::Up : StrandOrientation::Down,
                      SlideDirection::RightToLeft};
  const Weight outer = slide_target(cd, strand, f.weight());
  const Weight& read_at = closure.read_outside ? outer : f.weight();
  const Orientation o = up ? closure.e_loop : opposite(closure.e_loop);
  CenterElement out(outer);
  for (const auto& term : slide_center_past_strand(cd, f, strand))
    out += term.coefficient * from_absolute(cd, i, o, dots + term.dots, read_at).retagged(outer);
  return out;
}

std::vector<ClosureConvention> passing_closures() {
  const CartanData sl2(2);
  std::vector<ClosureConvention> out;
  for (Orientation o : {Orientation::Clockwise, Orientation::Counterclockwise})
    for (bool outside : {false, true}) {
      const ClosureConvention c{o, outside};
      bool ok = true;
      for (int lambda = -4; lambda <= 4 && ok; ++lambda) {
        const Weight w{{lambda}};
        const CenterElement unit = CenterElement::constant(w, 1);
        const CenterElement ef = encircle(sl2, 1, true, 0, encircle(sl2, 1, false, 0, unit, c), c);
        const CenterElement fe = encircle(sl2, 1, false, 0, encircle(sl2, 1, true, 0, unit, c), c);
        ok = ef - fe == CenterElement::constant(w, lambda);
      }
      if (ok) out.push_back(c);
    }
  return out;
}

const ClosureConvention& calibrated_closure() {
  static const ClosureConvention chosen = [] {
    const auto passing = passing_closures();
    if (passing.size() != 1)
      throw std::logic_error("closure calibration found " + std::to_string(passing.size()) +
                             " candidates");
    return passing.front();
  }();
  return chosen;
}

// --- evaluation -------------------------------------------------------------

namespace {

void check_generator(const CartanData& cd, const CurrentGen& g) {
  cd.require_current_gate();
  if (g.kind == CurrentGen::Kind::Idem) {
    cd.check_weight(g.weight);
    return;
  }
  cd.check_node(g.node);
  if (g.degree < 0) throw DomainError("generator degree must be nonnegative");
}

template <class E>
CenterVector run_word(const CartanData& cd, const std::vector<CurrentGen>& word,
                      const CenterVector& v) {
  typename E::Vector out = E::from_center(v);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = E::act(cd, *it, out);
  return E::to_center(cd, out);
}

}  // namespace

CenterVector act(const CartanData& cd, const CurrentGen& g, const CenterVector& v) {
  return act_word(cd, {g}, v);
}

CenterVector act_xplus(const CartanData& cd, int i, int r, const CenterVector& v) {
  return act(cd, CurrentGen::xplus(i, r), v);
}

CenterVector act_xminus(const CartanData& cd, int i, int s, const CenterVector& v) {
  return act(cd, CurrentGen::xminus(i, s), v);
}

CenterVector act_xi(const CartanData& cd, int i, int r, const CenterVector& v) {
  return act(cd, CurrentGen::xi(i, r), v);
}

CenterVector act_word(const CartanData& cd, const std::vector<CurrentGen>& word,
                      const CenterVector& v) {
  cd.require_current_gate();
  for (const auto& g : word) check_generator(cd, g);
  for (const auto& [w, e] : v.components()) cd.check_weight(w);
  calibrated_closure();
  // Operators are linear, so clear denominators and run on integers.
  mpz_class den = 1;
  for (const auto& [w, e] : v.components())
    for (const auto& [m, c] : e.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational scale(den);
  try {
    return Rational(1) / scale * run_word<engine::Fast>(cd, word, scale * v);
  } catch (const engine::Overflow&) {
    return run_word<engine::Exact>(cd, word, v);
  }
}

CenterElement random_center_element(const CartanData& cd, const Weight& lambda,
                                    std::mt19937_64& rng) {
  auto uniform = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  CenterElement out(lambda);
  const int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    const int coeff = uniform(-3, 3);
    const int gens = uniform(0, 4);
    BubbleMonomial m;
    for (int g = 0; g < gens; ++g) m.push_back({uniform(1, cd.nodes()), uniform(1, 3)});
    out.add_term(std::move(m), coeff);
  }
  return out;
}

// --- verification -----------------------------------------------------------

bool CurrentReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

namespace {

using Word = std::vector<CurrentGen>;

struct Instance {
  std::string axiom;
  std::string label;
  std::vector<std::pair<Rational, Word>> combination;  // must act as zero
  bool ccw_normal_form() const {
    int plus = 0, minus = 0;
    for (const auto& [c, w] : combination)
      for (const auto& g : w) {
        plus += g.kind == CurrentGen::Kind::XPlus;
        minus += g.kind == CurrentGen::Kind::XMinus;
      }
    return minus > plus;
  }
};

CurrentGen x(bool plus, int i, int k) {
  return plus ? CurrentGen::xplus(i, k) : CurrentGen::xminus(i, k);
}

// [a, b] as a combination of words.
void commutator(Instance& in, const Rational& c, const Word& a, const Word& b) {
  Word ab(a), ba(b);
  ab.insert(ab.end(), b.begin(), b.end());
  ba.insert(ba.end(), a.begin(), a.end());
  in.combination.push_back({c, ab});
  in.combination.push_back({-c, ba});
}

std::string s(int v) { return std::to_string(v); }
const char* pm(bool plus) { return plus ? "pm=+" : "pm=-"; }

std::vector<Instance> instances(const CartanData& cd, int D) {
  std::vector<Instance> out;
  const int N = cd.nodes();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int r = 0; r <= D; ++r)
        for (int q = 0; q <= D; ++q) {
          Instance in{"C1", "i=" + s(i) + " j=" + s(j) + " r=" + s(r) + " s=" + s(q), {}};
          commutator(in, 1, {CurrentGen::xi(i, r)}, {CurrentGen::xi(j, q)});
          out.push_back(std::move(in));
        }
  for (bool plus : {true, false})
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k <= D; ++k) {
          Instance in{"C2", "i=" + s(i) + " j=" + s(j) + " k=" + s(k) + " " + pm(plus), {}};
          commutator(in, 1, {CurrentGen::xi(i, 0)}, {x(plus, j, k)});
          in.combination.push_back({Rational(plus ? -1 : 1) * cd.cartan(i, j), {x(plus, j, k)}});
          out.push_back(std::move(in));
        }
  for (bool plus : {true, false})
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int r = 1; r <= D; ++r)
          for (int k = 0; k <= D; ++k) {
            Instance in{"C3",
                        "i=" + s(i) + " j=" + s(j) + " r=" + s(r) + " k=" + s(k) + " " + pm(plus),
                        {}};
            commutator(in, 1, {CurrentGen::xi(i, r)}, {x(plus, j, k)});
            in.combination.push_back(
                {Rational(plus ? -1 : 1) * cd.cartan(i, j), {x(plus, j, r + k)}});
            out.push_back(std::move(in));
          }
  for (bool plus : {true, false})
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k < D; ++k)
          for (int l = 0; l < D; ++l) {
            Instance in{"C4",
                        "i=" + s(i) + " j=" + s(j) + " k=" + s(k) + " l=" + s(l) + " " + pm(plus),
                        {}};
            commutator(in, 1, {x(plus, i, k + 1)}, {x(plus, j, l)});
            commutator(in, -1, {x(plus, i, k)}, {x(plus, j, l + 1)});
            out.push_back(std::move(in));
          }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 0; k <= D; ++k)
        for (int l = 0; l <= D; ++l) {
          Instance in{"C5", "i=" + s(i) + " j=" + s(j) + " k=" + s(k) + " l=" + s(l), {}};
          commutator(in, 1, {CurrentGen::xplus(i, k)}, {CurrentGen::xminus(j, l)});
          if (i == j) in.combination.push_back({-1, {CurrentGen::xi(i, k + l)}});
          out.push_back(std::move(in));
        }
  for (bool plus : {true, false})
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i == j) continue;
        const int m = 1 - cd.cartan(i, j);
        // nondecreasing k-tuples, the relation being symmetric in them
        std::vector<int> ks(m, 0);
        while (true) {
          for (int l = 0; l <= D; ++l) {
            std::string label = "i=" + s(i) + " j=" + s(j) + " k=(";
            for (int t = 0; t < m; ++t) label += (t ? "," : "") + s(ks[t]);
            Instance in{"C6", label + ") l=" + s(l) + " " + pm(plus), {}};
            std::vector<int> perm(m);
            std::iota(perm.begin(), perm.end(), 0);
            do {
              Rational binom = 1;
              for (int t = 0; t <= m; ++t) {
                Word w;
                for (int u = 0; u < t; ++u) w.push_back(x(plus, i, ks[perm[u]]));
                w.push_back(x(plus, j, l));
                for (int u = t; u < m; ++u) w.push_back(x(plus, i, ks[perm[u]]));
                in.combination.push_back({t % 2 == 0 ? binom : Rational(-binom), w});
                binom = binom * (m - t) / (t + 1);
              }
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(std::move(in));
          }
          int pos = m - 1;
          while (pos >= 0 && ks[pos] == D) --pos;
          if (pos < 0) break;
          ++ks[pos];
          for (int t = pos + 1; t < m; ++t) ks[t] = ks[pos];
        }
      }
  return out;
}

std::vector<Weight> weight_box(const CartanData& cd, int wmin, int wmax) {
  std::vector<Weight> out;
  Weight w{std::vector<int>(cd.nodes(), wmin)};
  while (true) {
    out.push_back(w);
    int pos = cd.nodes() - 1;
    while (pos >= 0 && w.values[pos] == wmax) w.values[pos--] = wmin;
    if (pos < 0) break;
    ++w.values[pos];
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t weight_index, int trial, int trials) {
  return seed + 0x9E3779B97F4A7C15ULL * (weight_index * static_cast<std::uint64_t>(trials) +
                                         static_cast<std::uint64_t>(trial) + 1);
}

// Word values on one test vector, shared across instances.
template <class E>
class WordCache {
 public:
  WordCache(const CartanData& cd, const CenterVector& v) : cd_(cd) {
    mixed_.emplace(Word{}, E::from_center(v));
  }

  const typename E::Vector& value(const Word& w, bool ccw) {
    auto& cache = normal_[ccw];
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    return cache.emplace(w, E::normalize(cd_, mixed(w), ccw)).first->second;
  }

 private:
  const typename E::Vector& mixed(const Word& w) {
    auto it = mixed_.find(w);
    if (it != mixed_.end()) return it->second;
    const Word tail(w.begin() + 1, w.end());
    typename E::Vector result = E::act(cd_, w.front(), mixed(tail));
    return mixed_.emplace(w, std::move(result)).first->second;
  }

  const CartanData& cd_;
  std::map<Word, typename E::Vector> mixed_;
  std::map<Word, typename E::Vector> normal_[2];
};

// Failing instances on one test vector.
template <class E>
std::vector<bool> failing(const CartanData& cd, const std::vector<Instance>& insts,
                          const CenterVector& v) {
  WordCache<E> cache(cd, v);
  std::vector<bool> out(insts.size());
  for (std::size_t k = 0; k < insts.size(); ++k) {
    const bool ccw = insts[k].ccw_normal_form();
    typename E::Vector total;
    for (const auto& [c, w] : insts[k].combination)
      E::add_into(total, cache.value(w, ccw), engine::from_rational<typename E::Coeff>(c));
    out[k] = !total.empty();
  }
  return out;
}

}  // namespace

CurrentReport verify_current_relations(const CartanData& cd, int wmin, int wmax,
                                       int max_degree, int trials, std::uint64_t seed,
                                       int threads) {
  cd.require_current_gate();
  if (wmin > wmax) throw DomainError("empty weight box");
  if (max_degree < 0) throw DomainError("max degree must be nonnegative");
  if (trials < 1) throw DomainError("need at least one trial");
  calibrated_closure();

  const auto insts = instances(cd, max_degree);
  const auto weights = weight_box(cd, wmin, wmax);
  // failures[w][k]: failing trials of instance k at weight w
  std::vector<std::vector<int>> failures(weights.size(), std::vector<int>(insts.size(), 0));

  auto run_weight = [&](std::size_t wi) {
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(trial_seed(seed, wi, t, trials));
      const CenterVector v(random_center_element(cd, weights[wi], rng));
      std::vector<bool> fails;
      try {
        fails = failing<engine::Fast>(cd, insts, v);
      } catch (const engine::Overflow&) {
        fails = failing<engine::Exact>(cd, insts, v);
      }
      for (std::size_t k = 0; k < insts.size(); ++k) failures[wi][k] += fails[k];
    }
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(weights.size())));
  if (workers == 1) {
    for (std::size_t wi = 0; wi < weights.size(); ++wi) run_weight(wi);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t wi = t; wi < weights.size(); wi += workers) run_weight(wi);
      });
    for (auto& th : pool) th.join();
  }

  CurrentReport report;
  report.seed = seed;
  report.trials = trials;
  for (std::size_t k = 0; k < insts.size(); ++k)
    for (std::size_t wi = 0; wi < weights.size(); ++wi)
      report.results.push_back({insts[k].axiom, insts[k].label, weights[wi], failures[wi][k]});
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const auto& a, const auto& b) { return a.axiom < b.axiom; });
  return report;
}

bool sl2_commutator_check(int r, int s, int wmin, int wmax, int trials, std::uint64_t seed) {
  if (r < 0 || s < 0) throw DomainError("degrees must be nonnegative");
  if (wmin > wmax) throw DomainError("empty weight range");
  const CartanData cd(2);
  std::mt19937_64 rng(seed);
  for (int lambda = wmin; lambda <= wmax; ++lambda) {
    const Weight w{{lambda}};
    std::vector<CenterVector> inputs{CenterVector(CenterElement::constant(w, 1))};
    for (int t = 0; t < trials; ++t) inputs.emplace_back(random_center_element(cd, w, rng));
    for (const auto& v : inputs) {
      const CenterVector lhs =
          act_xplus(cd, 1, r, act_xminus(cd, 1, s, v)) - act_xminus(cd, 1, s, act_xplus(cd, 1, r, v));
      if (lhs != act_xi(cd, 1, r + s, v)) return false;
    }
  }
  return true;
}

}  // namespace tracecat
