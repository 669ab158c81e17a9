#pragma once

// Evaluation of current-algebra operators on polynomials in both clockwise
// and counterclockwise spade bubbles. Encircling never has to expand a
// bubble into the other family; values are brought to a normal form (one
// family only) when they are compared or returned.
//
// The engine is generic in the coefficient and monomial types. Fast uses
// checked 64-bit integers and fixed-capacity monomials and throws Overflow
// when either is exceeded; Exact never does.

#include "tracecat/bubble.hpp"
#include "tracecat/current.hpp"
#include "tracecat/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace tracecat::engine {

struct Overflow {};

struct Gen {
  int node;
  int alpha;
  bool ccw;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Checked machine integer.
class Small {
 public:
  Small() = default;
  Small(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Small operator+(Small a, Small b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Small operator*(Small a, Small b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  Small operator-() const {
    if (v_ == INT64_MIN) throw Overflow{};
    return -v_;
  }
  Small& operator+=(Small b) { return *this = *this + b; }
  Small& operator*=(Small b) { return *this = *this * b; }

 private:
  std::int64_t v_ = 0;
};

inline bool coeff_zero(Small c) { return c.is_zero(); }
inline bool coeff_zero(const Rational& c) { return tracecat::is_zero(c); }

template <class C>
C from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}

template <>
inline Small from_rational<Small>(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw Overflow{};
  return Small(r.get_num().get_si());
}

inline Rational to_rational(const Rational& c) { return c; }
inline Rational to_rational(Small c) { return Rational(static_cast<long>(c.value())); }

// Sorted multiset of generators.
class VecMono {
 public:
  std::size_t size() const { return g_.size(); }
  Gen operator[](std::size_t k) const { return g_[k]; }

  void insert(Gen g) { g_.insert(std::upper_bound(g_.begin(), g_.end(), g), g); }

  static VecMono merge(const VecMono& a, const VecMono& b) {
    VecMono m;
    m.g_.reserve(a.size() + b.size());
    std::merge(a.g_.begin(), a.g_.end(), b.g_.begin(), b.g_.end(), std::back_inserter(m.g_));
    return m;
  }

  std::uint64_t hash() const {
    std::uint64_t h = g_.size();
    for (const auto& g : g_)
      h = h * 0x100000001B3ULL ^ static_cast<std::uint64_t>(g.node << 16 | g.alpha << 1 | g.ccw);
    return h * 0x9E3779B97F4A7C15ULL;
  }

  friend auto operator<=>(const VecMono&, const VecMono&) = default;

 private:
  std::vector<Gen> g_;
};

// Sorted multiset packed as (node << 8 | ccw << 7 | alpha).
class InlineMono {
 public:
  static constexpr std::size_t capacity = 24;

  std::size_t size() const { return n_; }
  Gen operator[](std::size_t k) const {
    const std::uint16_t c = g_[k];
    return {c >> 8, c & 0x7f, (c & 0x80) != 0};
  }

  void insert(Gen g) {
    if (n_ == capacity || g.node < 0 || g.node > 0xff || g.alpha < 0 || g.alpha > 0x7f)
      throw Overflow{};
    const auto code = static_cast<std::uint16_t>(g.node << 8 | (g.ccw ? 0x80 : 0) | g.alpha);
    auto* pos = std::upper_bound(g_.begin(), g_.begin() + n_, code);
    std::copy_backward(pos, g_.begin() + n_, g_.begin() + n_ + 1);
    *pos = code;
    ++n_;
  }

  static InlineMono merge(const InlineMono& a, const InlineMono& b) {
    if (a.n_ + b.n_ > capacity) throw Overflow{};
    InlineMono m;
    std::merge(a.g_.begin(), a.g_.begin() + a.n_, b.g_.begin(), b.g_.begin() + b.n_,
               m.g_.begin());
    m.n_ = a.n_ + b.n_;
    return m;
  }

  std::uint64_t hash() const {
    std::uint64_t h = n_;
    for (std::size_t k = 0; k < n_; ++k) h = h * 0x100000001B3ULL ^ g_[k];
    return h * 0x9E3779B97F4A7C15ULL;
  }

  friend bool operator==(const InlineMono& a, const InlineMono& b) {
    return a.n_ == b.n_ && std::equal(a.g_.begin(), a.g_.begin() + a.n_, b.g_.begin());
  }
  friend bool operator<(const InlineMono& a, const InlineMono& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.g_.begin(), a.g_.begin() + a.n_, b.g_.begin(),
                                        b.g_.begin() + b.n_);
  }

 private:
  std::array<std::uint16_t, capacity> g_{};
  std::uint8_t n_ = 0;
};

inline Orientation opposite(Orientation o) {
  return o == Orientation::Clockwise ? Orientation::Counterclockwise : Orientation::Clockwise;
}

inline int twist(int i, int r) { return ((i + 1) * r) % 2 == 0 ? 1 : -1; }

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t key_hash(const VecMono& m) { return m.hash(); }
inline std::uint64_t key_hash(const InlineMono& m) { return m.hash(); }
template <class M>
std::uint64_t key_hash(const std::pair<int, M>& k) {
  return mix(key_hash(k.second), static_cast<std::uint64_t>(k.first));
}

// Merges equal keys in place and drops zero coefficients. Order of the
// surviving terms is unspecified.
template <class K, class C>
void compact(std::vector<std::pair<K, C>>& terms) {
  std::size_t buckets = 16;
  while (buckets < 2 * terms.size()) buckets *= 2;
  constexpr std::uint32_t empty = 0xffffffff;
  thread_local std::vector<std::uint32_t> table;
  table.assign(buckets, empty);
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::size_t slot = key_hash(terms[k].first) & (buckets - 1);
    while (table[slot] != empty && !(terms[table[slot]].first == terms[k].first))
      slot = (slot + 1) & (buckets - 1);
    if (table[slot] == empty) {
      if (out != k) terms[out] = std::move(terms[k]);
      table[slot] = static_cast<std::uint32_t>(out++);
    } else {
      terms[table[slot]].second += terms[k].second;
    }
  }
  terms.resize(out);
  std::erase_if(terms, [](const auto& t) { return coeff_zero(t.second); });
}

// Compacts once the terms appended since the last call outnumber the merged
// ones, keeping peak memory near the size of the result.
template <class K, class C>
void compact_if_grown(std::vector<std::pair<K, C>>& terms, std::size_t& merged) {
  if (terms.size() < 2 * merged + 4096) return;
  compact(terms);
  merged = terms.size();
}

template <class C, class M>
struct Engine {
  using Coeff = C;
  // No repeated monomials, no zero coefficients; unordered.
  using Poly = std::vector<std::pair<M, C>>;
  using Vector = std::map<Weight, Poly>;

  // Adds c * v.
  static void add_into(Vector& into, const Vector& v, const C& c) {
    for (const auto& [w, p] : v) {
      Poly& slot = into[w];
      for (const auto& [m, x] : p) slot.emplace_back(m, c * x);
      compact(slot);
      if (slot.empty()) into.erase(w);
    }
  }

  // Offset 0 is the unit and adds nothing.
  static void add_gen(M& m, int node, int alpha, bool ccw) {
    if (alpha > 0) m.insert({node, alpha, ccw});
  }

  static Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    std::size_t merged = 0;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) out.emplace_back(M::merge(ma, mb), ca * cb);
      compact_if_grown(out, merged);
    }
    compact(out);
    return out;
  }

  // Coefficients must convert to C.
  static Vector from_center(const CenterVector& v) {
    Vector out;
    for (const auto& [w, e] : v.components()) {
      Poly& p = out[w];
      for (const auto& [m, c] : e.terms()) {
        M mm;
        for (const auto& g : m) add_gen(mm, g.node, g.alpha, false);
        p.emplace_back(std::move(mm), from_rational<C>(c));
      }
      compact(p);
    }
    return out;
  }

  // The bubble of one family as a polynomial in the other. The relation
  // sum cc_a c_b = delta is symmetric in the two families, so both
  // directions are the same polynomial.
  static const Poly& switch_family(const CartanData& cd, int node, int alpha, bool to_ccw) {
    thread_local std::map<std::tuple<int, int, bool>, Poly> memo;
    const auto key = std::tuple{node, alpha, to_ccw};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly p;
    const Weight any{std::vector<int>(cd.nodes(), 0)};
    const CenterElement e = cc_bubble(cd, node, alpha, any);
    for (const auto& [bm, bc] : e.terms()) {
      M mm;
      for (const auto& bg : bm) add_gen(mm, bg.node, bg.alpha, to_ccw);
      p.emplace_back(std::move(mm), from_rational<C>(bc));
    }
    compact(p);
    return memo.emplace(key, std::move(p)).first->second;
  }

  // Product of the generators of `foreign`, each rewritten into the family
  // `to_ccw`.
  static const Poly& switch_monomial(const CartanData& cd, const M& foreign, bool to_ccw) {
    thread_local std::map<std::pair<M, bool>, Poly> memo;
    if (memo.size() > 200000) memo.clear();
    auto key = std::pair{foreign, to_ccw};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly p{{M{}, C(1)}};
    for (std::size_t k = 0; k < foreign.size(); ++k) {
      const Gen g = foreign[k];
      p = multiply(p, switch_family(cd, g.node, g.alpha, to_ccw));
    }
    return memo.emplace(std::move(key), std::move(p)).first->second;
  }

  // Every generator written in the family `ccw`.
  static Vector normalize(const CartanData& cd, const Vector& v, bool ccw) {
    Vector out;
    for (const auto& [w, p] : v) {
      Poly total;
      std::size_t merged = 0;
      for (const auto& [m, c] : p) {
        compact_if_grown(total, merged);
        M kept, foreign;
        for (std::size_t k = 0; k < m.size(); ++k) {
          const Gen g = m[k];
          (g.ccw == ccw ? kept : foreign).insert(g);
        }
        if (foreign.size() == 0) {
          total.emplace_back(m, c);
          continue;
        }
        for (const auto& [fm, fc] : switch_monomial(cd, foreign, ccw))
          total.emplace_back(M::merge(fm, kept), c * fc);
      }
      compact(total);
      if (!total.empty()) out.emplace(w, std::move(total));
    }
    return out;
  }

  static CenterVector to_center(const CartanData& cd, const Vector& v) {
    CenterVector out;
    for (const auto& [w, p] : normalize(cd, v, false)) {
      CenterElement e(w);
      for (const auto& [m, c] : p) {
        BubbleMonomial bm;
        for (std::size_t k = 0; k < m.size(); ++k) bm.push_back({m[k].node, m[k].alpha});
        e.add_term(std::move(bm), to_rational(c));
      }
      out.add(e);
    }
    return out;
  }

  static Poly encircle(const CartanData& cd, int i, bool up, int dots, const Poly& f,
                       const Weight& inner, const Weight& outer,
                       const ClosureConvention& closure) {
    const Strand strand{i, up ? StrandOrientation::Up : StrandOrientation::Down,
                        SlideDirection::RightToLeft};
    const Weight& read_at = closure.read_outside ? outer : inner;
    const Orientation o = up ? closure.e_loop : opposite(closure.e_loop);

    struct Term {
      int dots;
      C coeff;
      int offset;
    };
    std::map<std::tuple<int, int, bool>, std::vector<Term>> rules;
    auto rule = [&](const Gen& g) -> const std::vector<Term>& {
      const auto key = std::tuple{g.node, g.alpha, g.ccw};
      auto it = rules.find(key);
      if (it != rules.end()) return it->second;
      std::vector<Term> terms;
      for (const auto& t : slide_rule(cd, g.node, g.alpha,
                                      g.ccw ? Orientation::Counterclockwise
                                            : Orientation::Clockwise,
                                      strand))
        terms.push_back({t.dots, from_rational<C>(t.coeff), t.offset});
      return rules.emplace(key, std::move(terms)).first->second;
    };

    Poly out;
    std::size_t out_merged = 0;
    std::vector<std::pair<std::pair<int, M>, C>> states, next;
    for (const auto& [m, c] : f) {
      compact_if_grown(out, out_merged);
      states.assign(1, {{0, M{}}, c});
      for (std::size_t k = 0; k < m.size(); ++k) {
        const Gen g = m[k];
        const auto& terms = rule(g);
        next.clear();
        std::size_t merged = 0;
        for (const auto& [key, coeff] : states) {
          for (const auto& t : terms) {
            M gens = key.second;
            add_gen(gens, g.node, t.offset, g.ccw);
            next.push_back({{key.first + t.dots, std::move(gens)}, coeff * t.coeff});
          }
          compact_if_grown(next, merged);
        }
        compact(next);
        std::swap(states, next);
      }
      for (auto& [key, coeff] : states) {
        const int alpha = spade_offset(o, dots + key.first, read_at[i]);
        if (alpha < 0) continue;
        M gens = key.second;
        add_gen(gens, i, alpha, o == Orientation::Counterclockwise);
        out.emplace_back(std::move(gens), coeff);
      }
    }
    compact(out);
    return out;
  }

  static Poly power_sum(int i, int r, const Weight& w) {
    Poly out;
    if (r == 0) {
      out.emplace_back(M{}, C(w[i]));
    } else {
      for (int a = 0; a <= r; ++a) {
        M m;
        add_gen(m, i, a, false);
        add_gen(m, i, r - a, true);
        out.emplace_back(std::move(m), C(a + 1));
      }
    }
    compact(out);
    return out;
  }

  // g must already have been validated.
  static Vector act(const CartanData& cd, const CurrentGen& g, const Vector& v) {
    Vector out;
    auto add = [&out](const Weight& w, Poly p) {
      if (p.empty()) return;
      auto [it, inserted] = out.try_emplace(w, std::move(p));
      if (!inserted) {
        it->second.insert(it->second.end(), p.begin(), p.end());
        compact(it->second);
        if (it->second.empty()) out.erase(it);
      }
    };
    const C sign(twist(g.node, g.degree));
    for (const auto& [w, p] : v) {
      cd.check_weight(w);
      switch (g.kind) {
        case CurrentGen::Kind::Idem:
          if (w == g.weight) add(w, p);
          break;
        case CurrentGen::Kind::Xi: {
          Poly prod = multiply(power_sum(g.node, g.degree, w), p);
          for (auto& [m, c] : prod) c *= sign;
          add(w, std::move(prod));
          break;
        }
        case CurrentGen::Kind::XPlus:
        case CurrentGen::Kind::XMinus: {
          const bool up = g.kind == CurrentGen::Kind::XPlus;
          const Weight outer = up ? cd.raise(w, g.node) : cd.lower(w, g.node);
          Poly image = encircle(cd, g.node, up, g.degree, p, w, outer, calibrated_closure());
          for (auto& [m, c] : image) c *= sign;
          add(outer, std::move(image));
          break;
        }
      }
    }
    return out;
  }
};

using Fast = Engine<Small, InlineMono>;
using Exact = Engine<Rational, VecMono>;

}  // namespace tracecat::engine
