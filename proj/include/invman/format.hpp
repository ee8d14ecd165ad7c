#pragma once

// Locale-independent numeric formatting: shortest general form at a fixed
// number of significant digits (default 12), used for CSV, JSON, and the
// displayed polynomial strings so that identical invocations are
// byte-identical.

#include <charconv>
#include <string>
#include <system_error>

namespace invman {

inline std::string format_significant(double value, int digits = 12) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

/// Rounds a value to the given number of significant decimal digits by
/// formatting and re-parsing; used to keep JSON numerics at the same
/// precision as the CSV outputs.
inline double round_significant(double value, int digits = 12) {
    const std::string s = format_significant(value, digits);
    double out = value;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

}  // namespace invman
