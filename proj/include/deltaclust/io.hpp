#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltaclust/types.hpp"

namespace deltaclust {

// Malformed text input; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// One "re,im" per line (whitespace around fields allowed, blank lines
// skipped). Values must be finite decimals; parsing is correctly rounded.
std::vector<PlanePoint> read_points(std::istream& in);

// Shortest round-trip formatting, one "re,im" per line.
void write_points(std::ostream& out, const std::vector<PlanePoint>& points);

// One positive integer label per line.
std::vector<std::uint32_t> read_labels(std::istream& in);
void write_labels(std::ostream& out, const Clustering& c);

std::string format_double(double x);

}  // namespace deltaclust
