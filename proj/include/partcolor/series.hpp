#pragma once

/**
 * Exact truncated power series in one variable over big integers.
 *
 * Every generating function handled by this library is a product of
 * factors 1/(1 - c x^j) or (1 + c x^j), so instead of general series
 * multiplication the engine offers in-place updates for those two factor
 * shapes. Each update costs O(N - j), which makes a full Euler product up
 * to order N cost O(N log N) coefficient operations.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace partcolor {

class OrderMismatch : public std::invalid_argument {
public:
    OrderMismatch(std::size_t expected, std::size_t got)
        : std::invalid_argument("series order mismatch: expected " + std::to_string(expected) +
                                ", got " + std::to_string(got)) {}
};

class DivisibilityError : public std::domain_error {
public:
    explicit DivisibilityError(std::size_t index)
        : std::domain_error("coefficient at index " + std::to_string(index) +
                            " is not divisible by the scaling denominator"),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    explicit TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
    }

    TruncatedSeries(std::initializer_list<BigInt> coeffs)
        : TruncatedSeries(std::vector<BigInt>(coeffs)) {}

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    const BigInt& operator[](std::size_t i) const noexcept { return coeffs_[i]; }
    BigInt& operator[](std::size_t i) noexcept { return coeffs_[i]; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

inline TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

inline const BigInt& coeff(const TruncatedSeries& s, std::size_t n) {
    if (n > s.order()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds order " +
                                std::to_string(s.order()));
    }
    return s[n];
}

/// s / (1 - c x^j). Ascending sweep so out[i - j] already carries the factor.
inline TruncatedSeries apply_geometric_factor(TruncatedSeries s, const BigInt& c, std::size_t j) {
    if (j == 0) throw std::invalid_argument("factor exponent must be positive");
    if (c == 0) return s;
    for (std::size_t i = j; i <= s.order(); ++i) s[i] += c * s[i - j];
    return s;
}

/// s * (1 + c x^j). Descending sweep so s[i - j] is still the input value.
inline TruncatedSeries apply_binomial_factor(TruncatedSeries s, const BigInt& c, std::size_t j) {
    if (j == 0) throw std::invalid_argument("factor exponent must be positive");
    if (c == 0 || j > s.order()) return s;
    for (std::size_t i = s.order(); i >= j; --i) s[i] += c * s[i - j];
    return s;
}

enum class ProductKind { reciprocal, binomial };

/// prod_{j>=1} 1/(1 - c x^j) or prod_{j>=1} (1 + c x^j), truncated at `order`.
inline TruncatedSeries euler_product(const BigInt& c, std::size_t order, ProductKind kind) {
    TruncatedSeries s = one(order);
    for (std::size_t j = 1; j <= order; ++j) {
        s = kind == ProductKind::reciprocal ? apply_geometric_factor(std::move(s), c, j)
                                            : apply_binomial_factor(std::move(s), c, j);
    }
    return s;
}

struct WeightedSeries {
    BigInt weight;
    TruncatedSeries series;
};

inline TruncatedSeries linear_combination(std::size_t order, std::span<const WeightedSeries> terms) {
    TruncatedSeries out(order);
    for (const auto& [weight, series] : terms) {
        if (series.order() != order) throw OrderMismatch(order, series.order());
        if (weight == 0) continue;
        for (std::size_t i = 0; i <= order; ++i) out[i] += weight * series[i];
    }
    return out;
}

/// Multiplies coefficients from start_index on by numerator/denominator;
/// every such quotient must be exact.
inline TruncatedSeries scale_exact(TruncatedSeries s, const BigInt& numerator,
                                   const BigInt& denominator, std::size_t start_index) {
    if (denominator <= 0) throw std::invalid_argument("scaling denominator must be positive");
    for (std::size_t i = start_index; i <= s.order(); ++i) {
        BigInt scaled = numerator * s[i];
        BigInt remainder;
        BigInt quotient;
        boost::multiprecision::divide_qr(scaled, denominator, quotient, remainder);
        if (remainder != 0) throw DivisibilityError(i);
        s[i] = std::move(quotient);
    }
    return s;
}

}  // namespace partcolor
