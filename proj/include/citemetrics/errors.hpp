#pragma once

#include <stdexcept>
#include <string>

namespace citemetrics {

// Caller supplied a value outside an operation's domain (negative count,
// k = 0, bad synth parameter, unparseable metric name).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A field or researcher id that the corpus does not contain.
class UnknownIdError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Data that contradicts itself, e.g. an h above its own field maximum, or a
// metric requested over a corpus that lacks the data it needs.
class InconsistentDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace citemetrics
