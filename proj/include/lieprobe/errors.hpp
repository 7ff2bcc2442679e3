#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieprobe {

/// Malformed input: unparsable text, JSON or command line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates a precondition (index out of range,
/// non-unitary matrix, empty spectrum, non-invertible divisor, ...).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource guard (cyclotomic order, term count, rank,
/// precision) would be exceeded.
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Process-wide guard settings. Defaults are safe for desk-scale ranks.
struct Limits {
  long max_cyclotomic_order = 1'000'000;
  std::size_t max_terms = 1'000'000;
  int max_rank = 6;
  int max_digits = 1000;

  static Limits& global();
};

}  // namespace lieprobe
