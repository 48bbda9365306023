#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace partcolor {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Accepts an optional sign followed by decimal digits only.
inline BigInt parse_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t p = i; p < text.size(); ++p) {
        if (text[p] < '0' || text[p] > '9') {
            throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
        }
    }
    BigInt v(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-v) : v;
}

// base^exp with 0^0 = 1.
inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp != 0) b *= b;
    }
    return result;
}

}  // namespace partcolor
