#pragma once

#include <stdexcept>
#include <string>

namespace mfim {

/// Malformed input text (ragged rows, bad tokens, duplicate items, empty input).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Item index outside the database universe.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Invalid thresholds, generator settings or violated preconditions.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The candidate pool outgrew its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses universes it cannot enumerate exactly.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller-supplied support count disagrees with the database.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mfim
