#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktuple {

/// Malformed graph input or invalid generator parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Randomized construction gave up (e.g. the pairing model ran out of retries).
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph's minimum degree is too small for a k-tuple (total) dominating
/// set to exist.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::size_t min_degree, int k, std::size_t required)
      : std::domain_error("no k-tuple dominating set exists: min degree " + std::to_string(min_degree) +
                          " < " + std::to_string(required) + " (k = " + std::to_string(k) + ")"),
        min_degree_(min_degree),
        k_(k),
        required_(required) {}

  std::size_t min_degree() const noexcept { return min_degree_; }
  int k() const noexcept { return k_; }
  std::size_t required_degree() const noexcept { return required_; }

 private:
  std::size_t min_degree_;
  int k_;
  std::size_t required_;
};

/// Brute-force oracles refuse inputs above their size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ktuple
