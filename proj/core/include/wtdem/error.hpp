#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtdem {

// Internal bound was too tight for a truncated-graph search.  Indicates a
// bug in the caller's cap, not bad user input.
struct TruncationTooSmall : std::logic_error {
  using std::logic_error::logic_error;
};

// An enumeration box grew past the configured candidate cap.
struct BoundOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two distance-minimising pairs produced different products.  Must never
// fire; it exists as a falsification harness.
struct WellDefinednessViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// A coweight left the Tits cone where the construction requires membership.
struct OutsideTitsCone : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
};

}  // namespace wtdem
