#ifndef W22_ERRORS_HPP
#define W22_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace w22 {

/// Generator index left the configured bound.
struct IndexOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// A word in U(L) grew past the configured length bound.
struct WordLengthExceeded : std::length_error {
  using std::length_error::length_error;
};

/// Requested Verma level is above the configured maximum.
struct LevelBoundExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Malformed textual input (rationals, polynomials, expressions, corpus records).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace w22

#endif
