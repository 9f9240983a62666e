#pragma once

#include <stdexcept>

namespace braid {

// Bad word syntax, invalid strand counts, malformed inputs. CLI exit 2.
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A query needs an element outside the precomputed ball. CLI exit 3.
struct out_of_ball : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured budget. CLI exit 3.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal invariant: always a bug, never bad input. CLI exit 4.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace braid
