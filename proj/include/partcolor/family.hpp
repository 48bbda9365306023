#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partcolor {

/// One of the eight colored-partition families, identified by its three restrictions.
struct FamilySpec {
    bool distinct_parts = false;
    bool exact_colors = false;
    bool adjacent_distinct = false;

    constexpr bool operator==(const FamilySpec&) const = default;

    /// Same restrictions on parts and adjacency, but any subset of the colors may be used.
    constexpr FamilySpec non_exact() const { return {distinct_parts, false, adjacent_distinct}; }
    constexpr FamilySpec exact() const { return {distinct_parts, true, adjacent_distinct}; }
};

namespace families {
inline constexpr FamilySpec cp{false, false, false};
inline constexpr FamilySpec ep{false, true, false};
inline constexpr FamilySpec d{false, false, true};
inline constexpr FamilySpec ed{false, true, true};
inline constexpr FamilySpec cd{true, false, false};
inline constexpr FamilySpec edistinct{true, true, false};
inline constexpr FamilySpec dd{true, false, true};
inline constexpr FamilySpec edd{true, true, true};
}  // namespace families

inline constexpr std::array<FamilySpec, 8> all_families{
    families::cp, families::ep, families::d,         families::ed,
    families::cd, families::edistinct, families::dd, families::edd,
};

/// CLI token: cp, ep, d, ed, cd, edistinct, dd, edd.
inline constexpr std::string_view token(FamilySpec f) {
    if (!f.distinct_parts) {
        if (!f.adjacent_distinct) return f.exact_colors ? "ep" : "cp";
        return f.exact_colors ? "ed" : "d";
    }
    if (!f.adjacent_distinct) return f.exact_colors ? "edistinct" : "cd";
    return f.exact_colors ? "edd" : "dd";
}

/// Conventional symbol: CP, EP, D, ED, Cd, Ed, Dd, EDd.
inline constexpr std::string_view symbol(FamilySpec f) {
    if (!f.distinct_parts) {
        if (!f.adjacent_distinct) return f.exact_colors ? "EP" : "CP";
        return f.exact_colors ? "ED" : "D";
    }
    if (!f.adjacent_distinct) return f.exact_colors ? "Ed" : "Cd";
    return f.exact_colors ? "EDd" : "Dd";
}

inline std::string valid_family_names() {
    std::string out;
    for (auto f : all_families) {
        if (!out.empty()) out += ", ";
        out += token(f);
    }
    return out;
}

class UnknownFamily : public std::invalid_argument {
public:
    explicit UnknownFamily(std::string_view name)
        : std::invalid_argument("unknown family '" + std::string(name) +
                                "'; valid names: " + valid_family_names()) {}
};

inline FamilySpec parse_family(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (auto f : all_families) {
        if (token(f) == lowered) return f;
    }
    throw UnknownFamily(name);
}

}  // namespace partcolor
