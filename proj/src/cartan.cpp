#include "tracecat/cartan.hpp"

#include "tracecat/errors.hpp"

#include <cstdlib>

namespace tracecat {

std::string Weight::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out + "]";
}

CartanData::CartanData(int n) : n_(n) {
  if (n < 2) throw DomainError("sl_n needs n >= 2");
  t_.assign(n - 1, std::vector<Rational>(n - 1, Rational(1)));
}

void CartanData::check_node(int i) const {
  if (i < 1 || i > nodes())
    throw DomainError("node " + std::to_string(i) + " is not in I = {1.." +
                      std::to_string(nodes()) + "}");
}

void CartanData::check_weight(const Weight& w) const {
  if (static_cast<int>(w.size()) != nodes())
    throw DomainError("weight " + w.to_string() + " needs " + std::to_string(nodes()) +
                      " entries");
}

int CartanData::cartan(int i, int j) const {
  check_node(i);
  check_node(j);
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

const Rational& CartanData::t(int i, int j) const {
  check_node(i);
  check_node(j);
  return t_[i - 1][j - 1];
}

Rational CartanData::v(int i, int j) const { return t(j, i) / t(i, j); }

void CartanData::set_t(int i, int j, const Rational& value) {
  check_node(i);
  check_node(j);
  if (tracecat::is_zero(value)) throw DomainError("t_ij must be invertible");
  if (i == j) {
    if (value != 1) throw DomainError("t_ii must be 1");
    return;
  }
  t_[i - 1][j - 1] = value;
  if (cartan(i, j) == 0) t_[j - 1][i - 1] = value;
}

bool CartanData::current_gate_ok() const {
  for (int i = 1; i <= nodes(); ++i)
    for (int j = 1; j <= nodes(); ++j) {
      if (i == j) continue;
      const Rational& a = t(i, j);
      if (a * a != 1 || v(i, j) != 1) return false;
    }
  return true;
}

void CartanData::require_current_gate() const {
  if (!current_gate_ok())
    throw DomainError("current-algebra action needs t_ij^2 = t_ji^2 = t_ij^-1 t_ji = 1");
}

Weight CartanData::raise(const Weight& w, int i) const {
  check_weight(w);
  Weight out = w;
  for (int j = 1; j <= nodes(); ++j) out.values[j - 1] += cartan(i, j);
  return out;
}

Weight CartanData::lower(const Weight& w, int i) const {
  check_weight(w);
  Weight out = w;
  for (int j = 1; j <= nodes(); ++j) out.values[j - 1] -= cartan(i, j);
  return out;
}

}  // namespace tracecat
