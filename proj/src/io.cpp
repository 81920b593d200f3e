#include "deltaclust/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace deltaclust {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line, "'" + std::string(field) + "' is not a number");
  }
  if (!std::isfinite(value)) throw ParseError(line, "coordinates must be finite");
  return value;
}

}  // namespace

std::vector<PlanePoint> read_points(std::istream& in) {
  std::vector<PlanePoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 're,im'");
    }
    points.push_back({parse_double(text.substr(0, comma), line_no),
                      parse_double(text.substr(comma + 1), line_no)});
  }
  return points;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_points(std::ostream& out, const std::vector<PlanePoint>& points) {
  for (const auto& p : points) out << format_double(p.re) << ',' << format_double(p.im) << '\n';
}

std::vector<std::uint32_t> read_labels(std::istream& in) {
  std::vector<std::uint32_t> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw ParseError(line_no, "expected a positive integer label");
    }
    labels.push_back(value);
  }
  return labels;
}

void write_labels(std::ostream& out, const Clustering& c) {
  for (auto label : c.labels) out << label << '\n';
}

}  // namespace deltaclust
