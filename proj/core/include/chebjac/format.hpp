#ifndef CHEBJAC_FORMAT_HPP
#define CHEBJAC_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace chebjac {

/// Shortest decimal text that parses back to exactly x.
inline std::string shortest_repr(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

}  // namespace chebjac

#endif  // CHEBJAC_FORMAT_HPP
