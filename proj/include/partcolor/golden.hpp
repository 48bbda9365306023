#pragma once

// Published table rows for all eight families, kept as printed. A handful of
// printed cells are known to be wrong or garbled; those are flagged per cell
// rather than edited out, so the self-test can report them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "families.hpp"
#include "family.hpp"

namespace partcolor::golden {

enum class CellKind {
    verbatim,      ///< compared as printed
    reinterpreted, ///< printing is garbled; compared against the reading in `value`
    erratum,       ///< printed value is wrong; never compared, reported instead
};

struct Cell {
    std::string_view printed;
    CellKind kind = CellKind::verbatim;
    std::string_view value{};  ///< reinterpreted reading; empty unless kind == reinterpreted

    std::string_view expected() const { return kind == CellKind::reinterpreted ? value : printed; }
};

struct Row {
    std::string_view label;  ///< where the row is printed
    FamilySpec family;
    std::size_t k;
    std::vector<Cell> cells;  ///< n = 1, 2, ...
    std::string_view note{};
};

namespace detail {
inline std::vector<Cell> cells(std::initializer_list<std::string_view> printed) {
    std::vector<Cell> out;
    for (auto p : printed) out.push_back({p});
    return out;
}
inline std::vector<Cell> zeros_then(std::size_t zeros, std::initializer_list<std::string_view> printed) {
    std::vector<Cell> out(zeros, Cell{"0"});
    for (auto p : printed) out.push_back({p});
    return out;
}
}  // namespace detail

inline const std::vector<Row>& table_rows() {
    using namespace families;
    using detail::cells;
    using detail::zeros_then;
    static const std::vector<Row> rows = [] {
        std::vector<Row> r{
            {"CP table k=1", cp, 1, cells({"1", "2", "3", "5", "7", "11", "15", "22", "30", "42"})},
            {"CP table k=2", cp, 2, cells({"2", "6", "14", "34", "74", "166", "350", "746", "1546"})},
            {"CP table k=3", cp, 3, cells({"3", "12", "39", "129", "399", "1245", "3783", "11514"})},
            {"CP table k=4", cp, 4, cells({"4", "20", "84", "356", "1444", "5876", "23604", "94852"})},

            {"EP_2 base case text", ep, 2, cells({"0", "2", "8", "24", "60", "144", "320"})},
            {"EP_3 example text", ep, 3, cells({"0", "0", "6", "42", "198", "780", "2778"})},
            {"EP table k=2", ep, 2, cells({"0", "2", "8", "24", "60", "144", "320", "702", "1486"})},
            {"EP table k=3", ep, 3, cells({"0", "0", "6", "42", "198", "780", "2778", "9342", "30186"})},
            {"EP table k=4", ep, 4, cells({"0", "0", "0", "24", "264", "1848", "10512", "53184"})},
            {"EP table k=5", ep, 5, cells({"0", "0", "0", "0", "120", "1920", "18840", "146760"})},

            {"D_3 example text", d, 3, cells({"3", "9", "21", "51", "111", "249", "525", "1119", "2319"})},
            {"D table k=2", d, 2, cells({"2", "4", "6", "10", "14", "22", "30", "44", "60"})},
            {"D table k=3", d, 3, cells({"3", "9", "21", "51", "111", "249", "525", "1119", "2319"})},
            {"D table k=4", d, 4, cells({"4", "16", "52", "172", "532", "1660", "5044", "15352"})},
            {"D table k=5", d, 5, cells({"5", "25", "105", "445", "1805", "7345", "29505", "11856 5"}),
             "eighth cell printed with a stray space inside the number"},

            {"ED table k=2", ed, 2, cells({"0", "2", "4", "8", "12", "20", "28", "42", "58"})},
            {"ED table k=3", ed, 3, cells({"0", "0", "6", "24", "72", "186", "438", "990", "2142"})},
            {"ED table k=4", ed, 4, cells({"0", "0", "0", "24", "168", "792", "3120", "11136"})},
            {"ED table k=5", ed, 5, cells({"0", "0", "0", "0", "120", "1320", "9240", "52560"})},

            {"Cd table k=1", cd, 1, cells({"1", "1", "2", "2", "3", "4", "5", "6", "8", "10", "12", "15", "18"})},
            {"Cd table k=2", cd, 2, cells({"2", "2", "6", "6", "10", "18", "22", "30", "42", "66", "78", "110"})},
            {"Cd table k=3", cd, 3, cells({"3", "3", "12", "12", "21", "48", "57", "84", "120", "228"})},
            {"Cd table k=4", cd, 4, cells({"4", "4", "20", "20", "36", "100", "116", "180", "260", "580", "660"})},
            {"Cd table k=5", cd, 5, cells({"5", "5", "30", "30", "55", "180", "205", "330", "480", "1230", "1380"})},

            {"Ed_2 base case text", edistinct, 2, cells({"0", "0", "2", "2", "4", "10", "12", "18", "26", "46", "54"})},
            {"Ed table k=2", edistinct, 2, cells({"0", "0", "2", "2", "4", "10", "12", "18", "26"})},
            {"Ed table k=3", edistinct, 3, cells({"0", "0", "0", "0", "0", "6", "6", "12", "18", "60"})},
            {"Ed table k=4", edistinct, 4, zeros_then(9, {"24", "24", "48", "72", "120", "1848", "10512", "53184"}),
             "cells after 120 repeat the EP_4 row"},
            {"Ed table k=5", edistinct, 5, zeros_then(14, {"120", "120", "240", "360", "600", "840"})},

            {"Dd example text (labelled Dd_3)", dd, 4,
             cells({"4", "4", "16", "16", "28", "64", "76", "112", "160", "304"}),
             "printed as the terms of Dd_3 right after stating Dd_4 = 4/3 Cd_3; the values are Dd_4"},
            {"Dd table k=2", dd, 2, cells({"2", "2", "4", "4", "6", "8", "10", "12", "16", "20", "24", "30", "36"})},
            {"Dd table k=3", dd, 3, cells({"3", "3", "9", "9", "15", "27", "33", "45", "63", "99", "117", "165"})},
            {"Dd table k=4", dd, 4, cells({"4", "4", "16", "16", "28", "64", "76", "112", "160", "304", "352", "532"})},
            {"Dd table k=5", dd, 5, cells({"5", "5", "25", "25", "45", "125", "145", "225", "325", "725", "825"})},

            {"EDd table k=2", edd, 2, cells({"0", "0", "2", "2", "4", "6", "8", "10", "14", "18"})},
            {"EDd table k=3", edd, 3, cells({"0", "0", "0", "0", "0", "6", "6", "12", "18", "42", "48", "78"})},
            {"EDd table k=4", edd, 4, zeros_then(9, {"24", "24", "48"})},
        };
        for (auto& row : r) {
            if (row.family == d && row.k == 5) row.cells[7] = {"11856 5", CellKind::reinterpreted, "118565"};
            if (row.family == edistinct && row.k == 4) {
                for (std::size_t i = 14; i < row.cells.size(); ++i) row.cells[i].kind = CellKind::erratum;
            }
        }
        return r;
    }();
    return rows;
}

// ---------------------------------------------------------------------------
// worked examples: explicit listings of colored partitions

struct ListedPartition {
    std::vector<std::size_t> parts;
    std::vector<std::size_t> colors;
};

struct WorkedExample {
    std::string_view label;
    FamilySpec family;
    std::size_t k;
    std::size_t n;
    BigInt count;
    std::vector<ListedPartition> listing;  ///< as drawn, typo in Dd_3(3) corrected
};

inline const std::vector<WorkedExample>& worked_examples() {
    using namespace families;
    static const std::vector<WorkedExample> ex{
        {"2-colored partitions of 2", cp, 2, 2, 6,
         {{{2}, {1}}, {{2}, {2}}, {{1, 1}, {1, 1}}, {{1, 1}, {1, 2}}, {{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}}},
        {"exact 2-colored partitions of 2", ep, 2, 2, 2, {{{1, 1}, {1, 2}}, {{1, 1}, {2, 1}}}},
        {"D_2(3)", d, 2, 3, 6,
         {{{3}, {1}}, {{3}, {2}}, {{2, 1}, {1, 2}}, {{2, 1}, {2, 1}}, {{1, 1, 1}, {1, 2, 1}}, {{1, 1, 1}, {2, 1, 2}}}},
        // the last drawn partition shows parts "1 1"; with distinct parts summing to 3 it must be 2+1
        {"Dd_3(3)", dd, 3, 3, 9,
         {{{3}, {1}}, {{3}, {2}}, {{3}, {3}}, {{2, 1}, {1, 2}}, {{2, 1}, {1, 3}}, {{2, 1}, {2, 3}},
          {{2, 1}, {2, 1}}, {{2, 1}, {3, 1}}, {{2, 1}, {3, 2}}}},
    };
    return ex;
}

// ---------------------------------------------------------------------------
// self-test

enum class CellOutcome { match, mismatch, known_erratum };

struct CellResult {
    std::size_t n;
    std::string printed;
    std::string computed;
    CellOutcome outcome;
    CellKind kind;
};

struct RowResult {
    const Row* row;
    std::vector<CellResult> cells;

    bool ok() const {
        return std::none_of(cells.begin(), cells.end(),
                            [](const CellResult& c) { return c.outcome == CellOutcome::mismatch; });
    }
};

struct SelftestReport {
    std::vector<RowResult> rows;
    std::size_t compared = 0;
    std::size_t mismatched = 0;
    std::size_t errata = 0;

    bool ok() const noexcept { return mismatched == 0; }
};

inline SelftestReport run_selftest(std::span<const Row> rows) {
    std::size_t max_n = 1;
    for (const auto& r : rows) max_n = std::max(max_n, r.cells.size());
    const PartitionTables tables(max_n);

    SelftestReport report;
    for (const auto& row : rows) {
        RowResult rr{&row, {}};
        const SequenceRecord seq = sequence(row.family, row.k, std::max<std::size_t>(row.cells.size(), 1), tables);
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            const Cell& cell = row.cells[i];
            const std::string computed = to_decimal(seq.values[i]);
            CellOutcome outcome = CellOutcome::known_erratum;
            if (cell.kind == CellKind::erratum) {
                ++report.errata;
            } else {
                ++report.compared;
                outcome = computed == cell.expected() ? CellOutcome::match : CellOutcome::mismatch;
                if (outcome == CellOutcome::mismatch) ++report.mismatched;
            }
            rr.cells.push_back({i + 1, std::string(cell.printed), computed, outcome, cell.kind});
        }
        report.rows.push_back(std::move(rr));
    }
    return report;
}

inline SelftestReport run_selftest() { return run_selftest(table_rows()); }

}  // namespace partcolor::golden
