#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace partcolor {

enum class TableKind { unrestricted, distinct };

/// Triangle t(n, m), 0 <= m <= n <= max_n, of partitions of n into exactly m
/// parts (unrestricted) or m distinct parts.
class PartitionTable {
public:
    PartitionTable(std::size_t max_n, TableKind kind) : max_n_(max_n), kind_(kind), rows_(max_n + 1) {
        for (std::size_t n = 0; n <= max_n; ++n) rows_[n].resize(n + 1);
    }

    std::size_t max_n() const noexcept { return max_n_; }
    TableKind kind() const noexcept { return kind_; }

    /// Zero outside the triangle.
    const BigInt& at(std::size_t n, std::size_t m) const {
        if (n > max_n_) throw std::out_of_range("n = " + std::to_string(n) + " exceeds table size " + std::to_string(max_n_));
        static const BigInt zero = 0;
        return m <= n ? rows_[n][m] : zero;
    }

    BigInt& cell(std::size_t n, std::size_t m) { return rows_[n][m]; }

    /// Sum over all part counts, including m = 0 (so row 0 gives 1).
    BigInt row_sum(std::size_t n) const {
        BigInt s = 0;
        for (const auto& v : rows_.at(n)) s += v;
        return s;
    }

private:
    std::size_t max_n_;
    TableKind kind_;
    std::vector<std::vector<BigInt>> rows_;
};

/// P(n,m) = P(n-1,m-1) + P(n-m,m): either some part is 1, or subtract 1 from every part.
inline PartitionTable build_partition_table(std::size_t max_n) {
    PartitionTable t(max_n, TableKind::unrestricted);
    t.cell(0, 0) = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            BigInt v = t.at(n - 1, m - 1);
            if (n - m >= m) v += t.at(n - m, m);
            t.cell(n, m) = std::move(v);
        }
    }
    return t;
}

/// d(n,m) = d(n-m,m) + d(n-m,m-1): subtract 1 from every part, dropping a part equal to 1.
inline PartitionTable build_distinct_table(std::size_t max_n) {
    PartitionTable t(max_n, TableKind::distinct);
    t.cell(0, 0) = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const std::size_t r = n - m;
            t.cell(n, m) = t.at(r, m) + t.at(r, m - 1);
        }
    }
    return t;
}

inline BigInt partition_count(std::size_t n, const PartitionTable& table) {
    if (table.kind() != TableKind::unrestricted) {
        throw std::invalid_argument("partition_count needs an unrestricted table");
    }
    if (n > table.max_n()) throw std::out_of_range("n = " + std::to_string(n) + " exceeds table size");
    return table.row_sum(n);
}

inline BigInt binomial(std::size_t k, std::size_t j) {
    if (j > k) return 0;
    if (j > k - j) j = k - j;
    BigInt c = 1;
    for (std::size_t i = 0; i < j; ++i) {
        c *= k - i;
        c /= i + 1;
    }
    return c;
}

/// Both tables for one size; built once and shared across families and color counts.
struct PartitionTables {
    PartitionTable unrestricted;
    PartitionTable distinct;

    explicit PartitionTables(std::size_t max_n)
        : unrestricted(build_partition_table(max_n)), distinct(build_distinct_table(max_n)) {}

    std::size_t max_n() const noexcept { return unrestricted.max_n(); }

    const PartitionTable& for_parts(bool distinct_parts) const {
        return distinct_parts ? distinct : unrestricted;
    }
};

}  // namespace partcolor
