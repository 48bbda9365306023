#pragma once

// Exhaustive enumeration of colored partitions. Deliberately naive: no
// memoization and nothing shared with the formula paths it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "family.hpp"

namespace partcolor::oracle {

using Parts = std::vector<std::size_t>;

struct ColoredPartition {
    Parts parts;                      ///< nonincreasing
    std::vector<std::size_t> colors;  ///< colors[i] in 1..k labels parts[i]

    bool operator==(const ColoredPartition&) const = default;
};

inline constexpr std::uint64_t default_budget = 1'000'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const BigInt& needed, std::uint64_t budget)
        : std::runtime_error("oracle out of budget: " + to_decimal(needed) +
                             " candidate words exceed budget " + std::to_string(budget)) {}
};

namespace detail {

inline void partitions_rec(std::size_t remaining, std::size_t max_part, bool distinct, Parts& current,
                           std::vector<Parts>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, distinct ? p - 1 : p, distinct, current, out);
        current.pop_back();
    }
}

inline bool admissible(const std::vector<std::size_t>& colors, std::size_t k, FamilySpec family) {
    if (family.adjacent_distinct) {
        for (std::size_t i = 1; i < colors.size(); ++i) {
            if (colors[i] == colors[i - 1]) return false;
        }
    }
    if (family.exact_colors) {
        std::vector<bool> used(k + 1, false);
        std::size_t distinct_used = 0;
        for (auto c : colors) {
            if (!used[c]) {
                used[c] = true;
                ++distinct_used;
            }
        }
        if (distinct_used != k) return false;
    }
    return true;
}

/// Calls visit(parts, colors) for every admissible colored partition of n.
template <class Visit>
void for_each_colored(FamilySpec family, std::size_t k, std::uint64_t budget, const std::vector<Parts>& parts,
                      Visit&& visit) {
    BigInt candidates = 0;
    for (const auto& p : parts) candidates += ipow(k, p.size());
    if (candidates > budget) throw BudgetExceeded(candidates, budget);

    for (const auto& p : parts) {
        const std::size_t m = p.size();
        std::vector<std::size_t> colors(m, 1);
        while (true) {
            if (admissible(colors, k, family)) visit(p, colors);
            // base-k counter over positions, last position fastest
            std::size_t pos = m;
            while (pos > 0 && colors[pos - 1] == k) colors[--pos] = 1;
            if (pos == 0) break;
            ++colors[pos - 1];
        }
    }
}

}  // namespace detail

/// Partitions of n in descending lexicographic order; strictly decreasing parts if `distinct`.
inline std::vector<Parts> enumerate_partitions(std::size_t n, bool distinct) {
    std::vector<Parts> out;
    Parts current;
    detail::partitions_rec(n, n, distinct, current, out);
    return out;
}

inline BigInt brute_count(FamilySpec family, std::size_t k, std::size_t n,
                          std::uint64_t budget = default_budget) {
    if (k == 0 || n == 0) throw std::invalid_argument("brute_count needs k >= 1 and n >= 1");
    const auto parts = enumerate_partitions(n, family.distinct_parts);
    std::uint64_t count = 0;
    detail::for_each_colored(family, k, budget, parts, [&](const Parts&, const std::vector<std::size_t>&) { ++count; });
    return count;
}

inline std::vector<ColoredPartition> enumerate_colored(FamilySpec family, std::size_t k, std::size_t n,
                                                       std::uint64_t budget = default_budget) {
    if (k == 0 || n == 0) throw std::invalid_argument("enumerate_colored needs k >= 1 and n >= 1");
    const auto parts = enumerate_partitions(n, family.distinct_parts);
    std::vector<ColoredPartition> out;
    detail::for_each_colored(family, k, budget, parts,
                             [&](const Parts& p, const std::vector<std::size_t>& c) { out.push_back({p, c}); });
    return out;
}

}  // namespace partcolor::oracle
