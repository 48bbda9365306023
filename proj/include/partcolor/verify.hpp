#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "families.hpp"
#include "family.hpp"
#include "oracle.hpp"
#include "partition_tables.hpp"

namespace partcolor {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::none_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.status == CheckStatus::fail; });
    }
};

struct VerifyOptions {
    std::size_t n_max = 10;
    std::size_t k_max = 4;
    std::uint64_t budget = oracle::default_budget;
    std::size_t oracle_n_cap = 10;
    std::size_t oracle_k_cap = 4;
};

namespace detail {

inline std::string cell_name(FamilySpec f, std::size_t k) { return std::string(symbol(f)) + "_" + std::to_string(k); }

class SequenceCache {
public:
    template <WordCounter W>
    SequenceCache(std::size_t max_n, const PartitionTables& tables, W words)
        : max_n_(max_n), compute_([&tables, words, max_n](FamilySpec f, std::size_t k) {
              return msum_sequence(f, k, max_n, tables, words);
          }) {}

    /// values[n - 1]
    const std::vector<BigInt>& get(FamilySpec f, std::size_t k) {
        auto key = std::pair{static_cast<int>(f.distinct_parts) * 4 + f.exact_colors * 2 + f.adjacent_distinct, k};
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, compute_(f, k).values).first;
        return it->second;
    }

    std::size_t max_n() const noexcept { return max_n_; }

private:
    std::size_t max_n_;
    std::function<SequenceRecord(FamilySpec, std::size_t)> compute_;
    std::map<std::pair<int, std::size_t>, std::vector<BigInt>> cache_;
};

inline CheckResult first_failure(std::string name, const std::vector<std::string>& failures) {
    if (failures.empty()) return {std::move(name), CheckStatus::pass, {}};
    std::string detail = failures.front();
    if (failures.size() > 1) detail += " (+" + std::to_string(failures.size() - 1) + " more)";
    return {std::move(name), CheckStatus::fail, std::move(detail)};
}

}  // namespace detail

/// Identities between families, evaluated on the part-count path for
/// k <= k_max and n <= n_max.
template <WordCounter W = StandardWordCount>
std::vector<CheckResult> invariant_checks(std::size_t k_max, std::size_t n_max, const PartitionTables& tables,
                                          W words = {}) {
    using namespace families;
    detail::SequenceCache seqs(n_max, tables, words);
    std::vector<CheckResult> out;
    const std::string range = " for k<=" + std::to_string(k_max) + ", n<=" + std::to_string(n_max);

    const std::pair<FamilySpec, FamilySpec> pairs[] = {{cp, ep}, {cd, edistinct}, {d, ed}, {dd, edd}};
    for (auto [all, exact] : pairs) {
        std::vector<std::string> failures;
        for (std::size_t k = 1; k <= k_max; ++k) {
            const auto& total = seqs.get(all, k);
            for (std::size_t n = 1; n <= n_max; ++n) {
                BigInt sum = 0;
                for (std::size_t j = 1; j <= k; ++j) sum += binomial(k, j) * seqs.get(exact, j)[n - 1];
                if (sum != total[n - 1]) failures.push_back(detail::cell_name(all, k) + "(" + std::to_string(n) + ")");
            }
        }
        out.push_back(detail::first_failure("binomial decomposition " + std::string(symbol(all)) + " = sum C(k,j) " +
                                                std::string(symbol(exact)) + "_j" + range,
                                            failures));
    }

    const std::pair<FamilySpec, FamilySpec> prefactor[] = {{d, cp}, {dd, cd}};
    for (auto [adj, free] : prefactor) {
        std::vector<std::string> failures;
        for (std::size_t k = 2; k <= k_max; ++k) {
            for (std::size_t n = 1; n <= n_max; ++n) {
                if ((k - 1) * seqs.get(adj, k)[n - 1] != k * seqs.get(free, k - 1)[n - 1]) {
                    failures.push_back(detail::cell_name(adj, k) + "(" + std::to_string(n) + ")");
                }
            }
        }
        out.push_back(detail::first_failure("prefactor (k-1)*" + std::string(symbol(adj)) + "_k = k*" +
                                                std::string(symbol(free)) + "_{k-1}" + range,
                                            failures));
    }

    {
        std::vector<std::string> failures;
        for (std::size_t k = 2; k <= k_max; ++k) {
            for (std::size_t n = 1; n <= n_max; ++n) {
                if (seqs.get(cp, k - 1)[n - 1] % (k - 1) != 0) failures.push_back(detail::cell_name(cp, k - 1) + "(" + std::to_string(n) + ")");
            }
        }
        out.push_back(detail::first_failure("divisibility (k-1) | CP_{k-1}(n)" + range, failures));
    }

    {
        std::vector<std::string> failures;
        for (std::size_t k = 1; k <= k_max; ++k) {
            for (auto f : {ep, ed}) {
                for (std::size_t n = 1; n < k && n <= n_max; ++n) {
                    if (seqs.get(f, k)[n - 1] != 0) failures.push_back(detail::cell_name(f, k) + "(" + std::to_string(n) + ")");
                }
            }
            for (auto f : {edistinct, edd}) {
                for (std::size_t n = 1; n < k * (k + 1) / 2 && n <= n_max; ++n) {
                    if (seqs.get(f, k)[n - 1] != 0) failures.push_back(detail::cell_name(f, k) + "(" + std::to_string(n) + ")");
                }
            }
        }
        out.push_back(detail::first_failure("zero prefixes of exact families" + range, failures));
    }

    {
        std::vector<std::string> failures;
        for (auto f : {d, dd}) {
            for (std::size_t n = 1; n <= n_max; ++n) {
                if (seqs.get(f, 1)[n - 1] != 1) failures.push_back(detail::cell_name(f, 1) + "(" + std::to_string(n) + ")");
            }
        }
        out.push_back(detail::first_failure("single color D_1 = Dd_1 = 1 for n<=" + std::to_string(n_max), failures));
    }
    return out;
}

/// Generating function against part-count sum, oracle against part-count sum,
/// then the invariant suite. `words` replaces the word counter of the
/// part-count path only.
template <WordCounter W = StandardWordCount>
VerifyReport run_verify(const VerifyOptions& opt, W words = {}) {
    VerifyReport report;
    const std::size_t series_n = std::max<std::size_t>(4 * opt.n_max, 1);
    const PartitionTables tables(series_n);

    for (auto f : all_families) {
        for (std::size_t k = 1; k <= opt.k_max; ++k) {
            const auto cc = cross_check(f, k, series_n, tables, words);
            std::string name = "series vs part-sum " + detail::cell_name(f, k) + " n<=" + std::to_string(series_n);
            if (cc.ok()) {
                report.checks.push_back({std::move(name), CheckStatus::pass, {}});
            } else {
                const auto& m = cc.mismatches.front();
                report.checks.push_back({std::move(name), CheckStatus::fail,
                                         "n=" + std::to_string(m.n) + ": series " + to_decimal(m.generating_function) +
                                             ", part-sum " + to_decimal(m.part_sum)});
            }
        }
    }

    const std::size_t oracle_n = std::min(opt.n_max, opt.oracle_n_cap);
    const std::size_t oracle_k = std::min(opt.k_max, opt.oracle_k_cap);
    for (auto f : all_families) {
        for (std::size_t k = 1; k <= oracle_k; ++k) {
            std::string name = "oracle vs part-sum " + detail::cell_name(f, k) + " n<=" + std::to_string(oracle_n);
            const auto ms = msum_sequence(f, k, oracle_n, tables, words);
            std::string failure;
            try {
                for (std::size_t n = 1; n <= oracle_n && failure.empty(); ++n) {
                    const BigInt brute = oracle::brute_count(f, k, n, opt.budget);
                    if (brute != ms.values[n - 1]) {
                        failure = "n=" + std::to_string(n) + ": oracle " + to_decimal(brute) + ", part-sum " +
                                  to_decimal(ms.values[n - 1]);
                    }
                }
            } catch (const oracle::BudgetExceeded& e) {
                report.checks.push_back({std::move(name), CheckStatus::skipped, e.what()});
                continue;
            }
            report.checks.push_back({std::move(name), failure.empty() ? CheckStatus::pass : CheckStatus::fail, failure});
        }
    }

    for (auto& c : invariant_checks(opt.k_max, series_n, tables, words)) report.checks.push_back(std::move(c));
    return report;
}

}  // namespace partcolor
