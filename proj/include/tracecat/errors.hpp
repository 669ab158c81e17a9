#pragma once

#include <stdexcept>
#include <string>

namespace tracecat {

// Malformed input text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition (strand-count
// mismatch, node out of range, scalar gate, box mismatch, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tracecat
