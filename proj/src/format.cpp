#include "nonext/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace nonext {

std::string format_shortest(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string format_digits(double x, int digits) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

}  // namespace nonext
