#pragma once

#include <string>

namespace misinfo {

// Locale-independent number formatting (always '.' as decimal separator).

/// Shortest of fixed/scientific with `digits` significant digits, like "%.*g".
std::string format_significant(double value, int digits);

/// Fixed notation with `decimals` digits after the point, like "%.*f".
std::string format_fixed(double value, int decimals);

}  // namespace misinfo
