#include "tracecat/parse.hpp"

#include "tracecat/errors.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <string>

namespace tracecat {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_alpha() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  // Unsigned decimal digits, no whitespace inside.
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  int integer() {
    const bool negative = accept('-');
    if (!negative) accept('+');
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    const int v = std::stoi(d);
    return negative ? -v : v;
  }
  int natural() {
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stoi(d);
  }
  Rational coefficient() {
    std::string num = digits();
    if (accept('/')) {
      std::string den = digits();
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }
  // Lowercase letters only; digits start the following number.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::vector<int> bracket_list(bool allow_negative) {
    expect('[');
    std::vector<int> out;
    if (accept(']')) return out;
    do out.push_back(allow_negative ? integer() : natural());
    while (accept(','));
    expect(']');
    return out;
  }
  int optional_power() {
    if (!accept('^')) return 1;
    return natural();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Generic expression := term (("+"|"-") term)*, term := coeff? factor*.
// `factor` reads one factor and returns its value; `unit` is the empty product.
template <class T, class Scale, class Mul>
T parse_expression(Lexer& lx, const T& zero, const T& unit,
                   const std::function<T(Lexer&)>& factor, Scale scale, Mul mul) {
  if (lx.at_end()) lx.fail("empty expression");
  T total = zero;
  bool first = true;
  while (!lx.at_end()) {
    Rational sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (!lx.accept('+') && !first)
      lx.fail("expected '+' or '-'");
    first = false;
    Rational c = 1;
    bool any = false;
    if (lx.peek_digit()) {
      c = lx.coefficient();
      any = true;
    }
    T term = unit;
    while (true) {
      const bool star = lx.accept('*');
      if (lx.peek_alpha()) {
        term = mul(term, factor(lx));
        any = true;
      } else if (star) {
        lx.fail("expected a factor after '*'");
      } else {
        break;
      }
    }
    if (!any) lx.fail("expected a term");
    total += scale(sign * c, term);
    const char next = lx.peek();
    if (next != '\0' && next != '+' && next != '-') lx.fail("unexpected character");
  }
  return total;
}

template <class T>
T power(const T& x, int k, const T& unit) {
  T out = unit;
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

Partition partition_from(Lexer& lx, const std::vector<int>& parts, bool must_be_sorted) {
  for (int p : parts)
    if (p <= 0) lx.fail("partition parts must be positive");
  if (!must_be_sorted) return Partition::from_unsorted(parts);
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1]) lx.fail("partition must be weakly decreasing");
  return Partition(parts);
}

}  // namespace

SymFn parse_sym(std::string_view text, std::optional<Basis> only) {
  Lexer lx(text);
  const std::function<SymFn(Lexer&)> factor = [&](Lexer& l) {
    const std::string name = l.word();
    Basis b;
    try {
      b = parse_basis(name);
    } catch (const ParseError&) {
      l.fail("unknown basis '" + name + "'");
    }
    if (only && b != *only)
      l.fail("basis '" + name + "' does not match --from " + std::string(basis_name(*only)));
    const auto parts = l.bracket_list(false);
    const bool sorted = b == Basis::m || b == Basis::schur;
    const Partition mu = partition_from(l, parts, sorted);
    const SymFn value = sym_from_basis(b, Expansion{{mu, Rational(1)}});
    return power(value, l.optional_power(), SymFn::constant(1));
  };
  return parse_expression<SymFn>(
      lx, SymFn{}, SymFn::constant(1), factor,
      [](const Rational& c, const SymFn& f) { return c * f; },
      [](const SymFn& a, const SymFn& b) { return a * b; });
}

nh::NHElement parse_nh(int n, std::string_view text) {
  if (n < 1) throw DomainError("NH_n needs n >= 1");
  Lexer lx(text);
  const std::function<nh::NHElement(Lexer&)> factor = [&](Lexer& l) {
    const std::string name = l.word();
    const int i = l.natural();
    if (name == "x") {
      if (i < 1 || i > n) throw DomainError("x" + std::to_string(i) + " needs 1 <= i <= n");
      return nh::NHElement::word(n, {nh::Letter::dot(i)});
    }
    if (name == "d") {
      if (i < 1 || i >= n) throw DomainError("d" + std::to_string(i) + " needs 1 <= i < n");
      return nh::NHElement::word(n, {nh::Letter::crossing(i)});
    }
    l.fail("unknown generator '" + name + "'");
  };
  return parse_expression<nh::NHElement>(
      lx, nh::NHElement(n), nh::NHElement::identity(n), factor,
      [](const Rational& c, const nh::NHElement& e) { return c * e; },
      [](const nh::NHElement& a, const nh::NHElement& b) { return a * b; });
}

nh::PolyN parse_poly(int n, std::string_view text) {
  if (n < 1) throw DomainError("polynomials need n >= 1");
  Lexer lx(text);
  const std::function<nh::PolyN(Lexer&)> factor = [&](Lexer& l) {
    const std::string name = l.word();
    if (name != "x") l.fail("unknown variable '" + name + "'");
    const int i = l.natural();
    if (i < 1 || i > n) throw DomainError("x" + std::to_string(i) + " needs 1 <= i <= n");
    nh::Exponent a(n, 0);
    a[i - 1] = l.optional_power();
    return nh::PolyN::monomial(n, a);
  };
  return parse_expression<nh::PolyN>(
      lx, nh::PolyN(n), nh::PolyN::constant(n, 1), factor,
      [](const Rational& c, nh::PolyN p) { return p *= c; },
      [](const nh::PolyN& a, const nh::PolyN& b) { return a * b; });
}

CenterElement parse_center(const CartanData& cd, const Weight& lambda, std::string_view text) {
  cd.check_weight(lambda);
  Lexer lx(text);
  const std::function<CenterElement(Lexer&)> factor = [&](Lexer& l) {
    const std::string name = l.word();
    const auto args = l.bracket_list(false);
    if (args.size() != 2) l.fail(name + "[...] takes a node and an offset");
    cd.check_node(args[0]);
    CenterElement value;
    if (name == "b") {
      if (args[1] < 1) throw DomainError("b[i,alpha] needs alpha >= 1");
      value = CenterElement::generator(lambda, args[0], args[1]);
    } else if (name == "cc") {
      value = cc_bubble(cd, args[0], args[1], lambda);
    } else if (name == "p") {
      value = power_sum(cd, args[0], args[1], lambda);
    } else {
      l.fail("unknown bubble '" + name + "'");
    }
    return power(value, l.optional_power(), CenterElement::constant(lambda, 1));
  };
  return parse_expression<CenterElement>(
      lx, CenterElement(lambda), CenterElement::constant(lambda, 1), factor,
      [](const Rational& c, const CenterElement& e) { return c * e; },
      [](const CenterElement& a, const CenterElement& b) { return a * b; });
}

GrCohElement parse_grass(int k, int n, std::string_view text) {
  Lexer lx(text);
  const std::function<GrCohElement(Lexer&)> factor = [&](Lexer& l) {
    const std::string name = l.word();
    if (name != "s") l.fail("Grassmannian classes are written s[...]");
    const Partition mu = partition_from(l, l.bracket_list(false), true);
    return GrCohElement::schur(k, n, mu);
  };
  return parse_expression<GrCohElement>(
      lx, GrCohElement(k, n), GrCohElement::one(k, n), factor,
      [](const Rational& c, const GrCohElement& e) { return c * e; },
      [](const GrCohElement& a, const GrCohElement& b) { return gr_mul(a, b); });
}

std::vector<CurrentGen> parse_current_word(std::string_view text) {
  Lexer lx(text);
  std::vector<CurrentGen> out;
  while (!lx.at_end()) {
    lx.accept('*');
    if (lx.peek() == '1') {
      lx.natural();
      out.push_back(CurrentGen::idem(Weight{lx.bracket_list(true)}));
      continue;
    }
    const std::string name = lx.word();
    CurrentGen::Kind kind;
    if (name == "xi") {
      kind = CurrentGen::Kind::Xi;
    } else if (name == "x" && lx.accept('+')) {
      kind = CurrentGen::Kind::XPlus;
    } else if (name == "x" && lx.accept('-')) {
      kind = CurrentGen::Kind::XMinus;
    } else {
      lx.fail("expected x+, x-, xi or 1");
    }
    const auto args = lx.bracket_list(false);
    if (args.size() != 2) lx.fail("generator takes [node,degree]");
    out.push_back({kind, args[0], args[1], {}});
  }
  if (out.empty()) throw ParseError("empty word");
  return out;
}

Weight parse_weight(std::string_view text) {
  Lexer lx(text);
  std::vector<int> values;
  if (lx.peek() == '[') {
    values = lx.bracket_list(true);
  } else {
    do values.push_back(lx.integer());
    while (lx.accept(','));
  }
  if (!lx.at_end()) lx.fail("unexpected character");
  return Weight{values};
}

std::pair<int, int> parse_range(std::string_view text) {
  Lexer lx(text);
  const int lo = lx.integer();
  int hi = lo;
  if (lx.accept("..")) hi = lx.integer();
  if (!lx.at_end()) lx.fail("expected lo..hi");
  if (lo > hi) throw DomainError("empty range " + std::string(text));
  return {lo, hi};
}

}  // namespace tracecat
