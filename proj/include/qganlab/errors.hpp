#pragma once

#include <stdexcept>
#include <string>

namespace qgan {

/** Operand dimensions do not match or are out of the supported range. */
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** A value violates an operation's contract (non-Hermitian input, bad Pauli
 *  string, mismatched qubit counts, ...). */
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Invalid experiment configuration (bad key, bad range, bad target). */
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** A numeric routine failed or produced a non-finite value. */
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** File could not be opened, read, or written. */
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgan
