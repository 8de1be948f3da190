#pragma once

#include <array>
#include <charconv>
#include <string>

namespace leaguestats {

// Shortest decimal string that round-trips to the same double. All CSV, JSON
// and SVG emitters go through this so identical inputs give identical bytes.
inline std::string format_double(double v) {
    std::array<char, 32> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace leaguestats
