#pragma once

#include <string>

namespace nonext {

/// Shortest decimal that round-trips to the same double (locale-independent).
std::string format_shortest(double x);

/// printf-style %.{digits}g in the C locale.
std::string format_digits(double x, int digits);

}  // namespace nonext
