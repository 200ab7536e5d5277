#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace gfp::detail {

// Shortest decimal form that round-trips the exact double.
inline std::string format_double(double v) {
    char buf[32];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        double back = 0.0;
        const auto [ptr, ec] = std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        if (ec == std::errc{} && *ptr == '\0' && back == v) break;
    }
    return buf;
}

}  // namespace gfp::detail
