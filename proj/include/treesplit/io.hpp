#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "treesplit/tree.hpp"

namespace treesplit {

enum class ParseErrc {
  syntax,
  too_many_fractional_digits,
  out_of_range,
  epsilon_not_representable,
};

const char* to_string(ParseErrc code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, std::size_t line, const std::string& what_arg)
      : std::runtime_error(line == 0 ? what_arg
                                     : "line " + std::to_string(line) + ": " + what_arg),
        code_(code),
        line_(line) {}
  ParseErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }  // 0 when positionless

 private:
  ParseErrc code_;
  std::size_t line_;
};

/// Exact decimal-to-units conversion at the given scale. "2.35" at scale 2 is
/// 235. More fractional digits than the scale allows is an error; so is a
/// value outside the signed 64-bit range. Negative values parse (validation
/// happens at build).
Weight parse_scaled_decimal(std::string_view text, std::uint32_t scale);

/// Canonical rendering: exactly `scale` fractional digits.
std::string format_scaled_decimal(Weight units, std::uint32_t scale);

/// Parses a non-negative decimal tolerance and returns 2*epsilon in scaled
/// units. Rejects values whose doubled form is not an integer at the scale.
Weight parse_doubled_epsilon(std::string_view text, std::uint32_t scale);

/// Tree file format:
///   tree <n> scale=<d>
///   v <id> <decimal-weight>     (one line per vertex)
///   e <u> <v>                   (n-1 lines)
/// '#' starts a comment; blank lines are ignored. Build errors (bad edge
/// count, disconnection, ...) propagate as TreeError.
WeightedTree parse_tree(std::string_view text);

/// Canonical form: header, vertex lines ascending, edge lines ascending in
/// (min,max) order, weights with exactly `scale` fractional digits.
std::string serialize_tree(const WeightedTree& t);

WeightedTree load_tree_file(const std::string& path);
void save_tree_file(const WeightedTree& t, const std::string& path);

}  // namespace treesplit
