#pragma once

#include <stdexcept>
#include <string>

namespace pejm {

// Malformed or inconsistent input: bad literals, rank mismatches, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematically valid query that this library deliberately does not answer
// (singular KL expansions for n >= 3, atypical twisted characters, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pejm
