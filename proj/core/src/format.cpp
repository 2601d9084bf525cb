#include "misinfo/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace misinfo {

namespace {

std::string to_chars_or_throw(double value, std::chars_format fmt, int precision) {
  std::array<char, 400> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt, precision);
  if (ec != std::errc{}) throw std::system_error(std::make_error_code(ec), "format");
  return std::string(buf.data(), end);
}

}  // namespace

std::string format_significant(double value, int digits) {
  return to_chars_or_throw(value, std::chars_format::general, digits);
}

std::string format_fixed(double value, int decimals) {
  return to_chars_or_throw(value, std::chars_format::fixed, decimals);
}

}  // namespace misinfo
