#pragma once

#include <cstdio>
#include <string>

namespace renorm {

/// Shortest-safe lossless text form: 17 significant digits, '.' separator.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace renorm

namespace renorm {

/// Compact form for labels and messages.
inline std::string format_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace renorm
