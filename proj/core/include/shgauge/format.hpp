#pragma once

#include <cstdio>
#include <string>

namespace shgauge {

/// Decimal text with 12 significant digits (printf %.12g).
inline std::string format_decimal(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace shgauge
