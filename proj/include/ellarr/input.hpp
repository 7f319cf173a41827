#pragma once

// Arrangement input documents:
//
//   {
//     "dim": 2,
//     "divisors": [
//       {"coeffs": [1, 0]},
//       {"coeffs": [0, 1], "translation": ["1/2", "0"]}
//     ]
//   }
//
// Coefficients are JSON integers (or decimal strings for large values).
// Translations are optional pairs of rational strings "p/q" with 0 <= p < q;
// "0" is accepted, and an omitted translation means ("0", "0").

#include "ellarr/arrangement.hpp"

#include <stdexcept>
#include <string>

namespace ellarr {

/// Malformed input; the message names the offending field or position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ArrangementSpec parse_input(const std::string& text);
ArrangementSpec read_input_file(const std::string& path);

/// Canonical document for a spec (lowest-terms translations, always present).
std::string render_input(const ArrangementSpec& spec);

/// Parses "p/q" or "p" as a rational in [0, 1). Throws ParseError.
Rat parse_translation(const std::string& text, const std::string& field);

}  // namespace ellarr
