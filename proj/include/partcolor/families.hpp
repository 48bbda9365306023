#pragma once

/**
 * The eight colored-partition counting families, computed along two
 * independent routes.
 *
 * Part-count sum (canonical): a partition with m parts admits a fixed number
 * of admissible color words w(m) that depends only on m, k and the color
 * restrictions, so
 *
 *     count(n) = sum_m T(n, m) * w(m),   T = P or d.
 *
 * Generating function (verification): Euler products in k (or k - 1, with
 * prefactor k/(k-1) for adjacent-distinct families), and signed binomial
 * combinations of those for the exact-color families.
 */

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "family.hpp"
#include "partition_tables.hpp"
#include "series.hpp"

namespace partcolor {

struct SequenceRecord {
    FamilySpec family;
    std::size_t k = 1;
    std::size_t start_n = 1;
    std::vector<BigInt> values;  ///< values[i] is the count for n = start_n + i

    bool operator==(const SequenceRecord&) const = default;

    const BigInt& at_n(std::size_t n) const { return values.at(n - start_n); }
};

class InconsistencyError : public std::logic_error {
public:
    InconsistencyError(FamilySpec family, std::size_t k, std::size_t n)
        : std::logic_error("generating-function and part-count paths disagree for " +
                           std::string(symbol(family)) + "_" + std::to_string(k) + "(" +
                           std::to_string(n) + ")"),
          family_(family), k_(k), n_(n) {}

    FamilySpec family() const noexcept { return family_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }

private:
    FamilySpec family_;
    std::size_t k_;
    std::size_t n_;
};

/// Number of length-m words over k colors meeting the color restrictions.
/// Exact variants use inclusion-exclusion over the excluded colors; 0^0 = 1.
inline BigInt word_count(std::size_t m, std::size_t k, bool exact, bool adjacent_distinct) {
    if (m == 0 || k == 0) throw std::invalid_argument("word_count needs m >= 1 and k >= 1");
    auto unrestricted = [m](std::size_t c) { return ipow(c, m); };
    auto adjacent = [m](std::size_t c) -> BigInt { return c == 0 ? BigInt(0) : c * ipow(c - 1, m - 1); };
    if (!exact) return adjacent_distinct ? adjacent(k) : unrestricted(k);

    BigInt total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        BigInt term = binomial(k, j) * (adjacent_distinct ? adjacent(k - j) : unrestricted(k - j));
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

template <class F>
concept WordCounter = requires(F f, std::size_t m, std::size_t k, bool b) {
    { f(m, k, b, b) } -> std::convertible_to<BigInt>;
};

struct StandardWordCount {
    BigInt operator()(std::size_t m, std::size_t k, bool exact, bool adjacent) const {
        return word_count(m, k, exact, adjacent);
    }
};

namespace detail {

inline void require_coverage(const PartitionTables& tables, std::size_t n) {
    if (n > tables.max_n()) {
        throw std::out_of_range("partition tables cover n <= " + std::to_string(tables.max_n()) +
                                ", requested " + std::to_string(n));
    }
}

template <WordCounter W>
std::vector<BigInt> word_weights(FamilySpec family, std::size_t k, std::size_t max_m, W& words) {
    std::vector<BigInt> w(max_m + 1);
    for (std::size_t m = 1; m <= max_m; ++m) w[m] = words(m, k, family.exact_colors, family.adjacent_distinct);
    return w;
}

inline BigInt weighted_row(const PartitionTable& t, std::size_t n, const std::vector<BigInt>& weights) {
    BigInt total = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        const BigInt& parts = t.at(n, m);
        if (parts != 0) total += parts * weights[m];
    }
    return total;
}

}  // namespace detail

template <WordCounter W = StandardWordCount>
BigInt count_msum(FamilySpec family, std::size_t k, std::size_t n, const PartitionTables& tables,
                  W words = {}) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    detail::require_coverage(tables, n);
    auto weights = detail::word_weights(family, k, n, words);
    return detail::weighted_row(tables.for_parts(family.distinct_parts), n, weights);
}

/// count_msum for every n in 1..max_n, sharing one weight vector.
template <WordCounter W = StandardWordCount>
SequenceRecord msum_sequence(FamilySpec family, std::size_t k, std::size_t max_n,
                             const PartitionTables& tables, W words = {}) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    detail::require_coverage(tables, max_n);
    auto weights = detail::word_weights(family, k, max_n, words);
    const PartitionTable& t = tables.for_parts(family.distinct_parts);
    SequenceRecord rec{family, k, 1, {}};
    rec.values.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) rec.values.push_back(detail::weighted_row(t, n, weights));
    return rec;
}

/// Generating function of a non-exact family over `colors` colors. Coefficient 0
/// is meaningless for adjacent families and must not be read.
inline TruncatedSeries family_series(FamilySpec family, std::size_t colors, std::size_t order) {
    const ProductKind kind = family.distinct_parts ? ProductKind::binomial : ProductKind::reciprocal;
    if (!family.adjacent_distinct) return euler_product(colors, order, kind);
    if (colors == 0) return TruncatedSeries(order);
    if (colors == 1) {
        // One color admits only single-part partitions: D_1(n) = Dd_1(n) = 1.
        return TruncatedSeries(std::vector<BigInt>(order + 1, BigInt(1)));
    }
    return scale_exact(euler_product(colors - 1, order, kind), colors, colors - 1, 1);
}

inline SequenceRecord count_gf(FamilySpec family, std::size_t k, std::size_t max_n) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    TruncatedSeries s = [&] {
        if (!family.exact_colors) return family_series(family, k, max_n);
        std::vector<WeightedSeries> terms;
        terms.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            BigInt sign = j % 2 == 0 ? 1 : -1;
            terms.push_back({sign * binomial(k, j), family_series(family.non_exact(), k - j, max_n)});
        }
        return linear_combination(max_n, terms);
    }();
    SequenceRecord rec{family, k, 1, {}};
    rec.values.assign(s.coeffs().begin() + 1, s.coeffs().end());
    return rec;
}

struct PathMismatch {
    std::size_t n;
    BigInt generating_function;
    BigInt part_sum;
};

struct CrossCheckReport {
    FamilySpec family;
    std::size_t k;
    std::size_t max_n;
    std::vector<PathMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

template <WordCounter W = StandardWordCount>
CrossCheckReport cross_check(FamilySpec family, std::size_t k, std::size_t max_n,
                             const PartitionTables& tables, W words = {}) {
    CrossCheckReport report{family, k, max_n, {}};
    const SequenceRecord gf = count_gf(family, k, max_n);
    const SequenceRecord ms = msum_sequence(family, k, max_n, tables, words);
    for (std::size_t i = 0; i < max_n; ++i) {
        if (gf.values[i] != ms.values[i]) report.mismatches.push_back({i + 1, gf.values[i], ms.values[i]});
    }
    return report;
}

inline CrossCheckReport cross_check(FamilySpec family, std::size_t k, std::size_t max_n) {
    return cross_check(family, k, max_n, PartitionTables(max_n));
}

enum class Verification { none, cross_check };

/// Canonical entry point: the part-count sum, optionally confirmed by the
/// generating function.
inline SequenceRecord sequence(FamilySpec family, std::size_t k, std::size_t max_n,
                               const PartitionTables& tables,
                               Verification verify = Verification::cross_check) {
    SequenceRecord rec = msum_sequence(family, k, max_n, tables);
    if (verify == Verification::cross_check) {
        const SequenceRecord gf = count_gf(family, k, max_n);
        for (std::size_t i = 0; i < max_n; ++i) {
            if (gf.values[i] != rec.values[i]) throw InconsistencyError(family, k, i + 1);
        }
    }
    return rec;
}

inline SequenceRecord sequence(FamilySpec family, std::size_t k, std::size_t max_n,
                               Verification verify = Verification::cross_check) {
    return sequence(family, k, max_n, PartitionTables(max_n), verify);
}

}  // namespace partcolor
