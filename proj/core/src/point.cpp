#include "hypmetric/point.hpp"

#include <charconv>
#include <system_error>

#include "hypmetric/errors.hpp"

namespace hypmetric {

Point parse_point(const std::string& text) {
  std::vector<double> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value))
      throw ParseError("malformed coordinate '" + token + "' in point '" + text + "'", token);
    coords.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

std::string to_string(const Point& p) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ',';
    const auto res = std::to_chars(buf, buf + sizeof buf, p[i]);
    out.append(buf, res.ptr);
  }
  return out;
}

}  // namespace hypmetric
