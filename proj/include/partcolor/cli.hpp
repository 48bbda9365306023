#pragma once

// Subcommands of the partcolor tool. Kept in a header so tests can drive the
// exact code path of the binary without spawning processes.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "families.hpp"
#include "family.hpp"
#include "golden.hpp"
#include "oeis.hpp"
#include "verify.hpp"

namespace partcolor::cli {

enum ExitCode : int { success = 0, check_failed = 1, usage_error = 2, io_error = 3 };

enum class Format { plain, csv, bfile, json };

inline void write_sequence(const SequenceRecord& rec, Format format, std::ostream& out) {
    switch (format) {
        case Format::plain:
            for (std::size_t i = 0; i < rec.values.size(); ++i) out << (i ? " " : "") << to_decimal(rec.values[i]);
            out << "\n";
            break;
        case Format::csv:
            out << "n,value\n";
            for (std::size_t i = 0; i < rec.values.size(); ++i) out << rec.start_n + i << "," << to_decimal(rec.values[i]) << "\n";
            break;
        case Format::bfile:
            for (std::size_t i = 0; i < rec.values.size(); ++i) out << rec.start_n + i << " " << to_decimal(rec.values[i]) << "\n";
            break;
        case Format::json: {
            nlohmann::ordered_json j;
            j["family"] = token(rec.family);
            j["k"] = rec.k;
            auto values = nlohmann::ordered_json::array();
            for (const auto& v : rec.values) values.push_back(to_decimal(v));
            j["values"] = std::move(values);
            out << j.dump() << "\n";
            break;
        }
    }
}

inline int cmd_compute(FamilySpec family, std::size_t k, std::size_t n_max, Format format, std::ostream& out,
                       std::ostream& err) {
    try {
        write_sequence(sequence(family, k, n_max), format, out);
    } catch (const InconsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return check_failed;
    }
    return success;
}

inline void print_verify(const VerifyReport& report, std::ostream& out) {
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& c : report.checks) {
        switch (c.status) {
            case CheckStatus::pass: ++passed; out << "PASS " << c.name << "\n"; break;
            case CheckStatus::fail: ++failed; out << "FAIL " << c.name << ": " << c.detail << "\n"; break;
            case CheckStatus::skipped: ++skipped; out << "SKIP " << c.name << ": " << c.detail << "\n"; break;
        }
    }
    out << "verify: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const auto report = run_verify(opt);
    print_verify(report, out);
    return report.ok() ? success : check_failed;
}

inline void print_selftest(const golden::SelftestReport& report, std::ostream& out) {
    using golden::CellKind;
    using golden::CellOutcome;
    for (const auto& rr : report.rows) {
        const auto& row = *rr.row;
        out << (rr.ok() ? "ok   " : "FAIL ") << row.label << ": " << symbol(row.family) << "_" << row.k << " n=1.."
            << row.cells.size() << "\n";
        for (const auto& c : rr.cells) {
            if (c.outcome == CellOutcome::mismatch) {
                out << "     n=" << c.n << " printed " << c.printed << ", computed " << c.computed << "\n";
            } else if (c.outcome == CellOutcome::known_erratum) {
                out << "     known erratum n=" << c.n << ": printed " << c.printed << ", computed " << c.computed << "\n";
            } else if (c.kind == CellKind::reinterpreted) {
                out << "     note n=" << c.n << ": printed '" << c.printed << "' read as " << c.computed << "\n";
            }
        }
        if (!row.note.empty()) out << "     (" << row.note << ")\n";
    }
    out << "selftest: " << report.rows.size() << " rows, " << report.compared << " cells compared, "
        << report.mismatched << " mismatched, " << report.errata << " known errata excluded\n";
}

inline int cmd_selftest(std::ostream& out) {
    const auto report = golden::run_selftest();
    print_selftest(report, out);
    return report.ok() ? success : check_failed;
}

inline int cmd_oeis(FamilySpec family, std::size_t k, std::size_t n_max, const std::filesystem::path& cache_dir,
                    const oeis::FetchOptions& fetch, std::ostream& out, std::ostream& err) {
    const auto mapping = oeis::find_mapping(family, k);
    if (!mapping) {
        out << symbol(family) << "_" << k << ": no mapping (published table: not found)\n";
        return success;
    }
    const SequenceRecord rec = sequence(family, k, n_max);
    try {
        const auto fetched = oeis::fetch_bfile_ex(mapping->sequence_id, cache_dir, fetch);
        const auto report = oeis::compare(rec, fetched.bfile, *mapping);
        out << symbol(family) << "_" << k << " vs " << mapping->sequence_id
            << (fetched.from_cache ? " (cached)" : "") << "\n";
        out << oeis::format_report(report);
        return report.matched() ? success : check_failed;
    } catch (const oeis::FetchError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const oeis::ParseError& e) {
        err << "error: " << mapping->sequence_id << ": " << e.what() << "\n";
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
    }
    return io_error;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts colored integer partitions and cross-checks them", "partcolor"};
    app.require_subcommand(1);

    std::string family_name;
    std::size_t k = 1;
    std::size_t n_max = 10;
    std::string format_name = "plain";
    VerifyOptions vopt;
    std::optional<std::string> cache_dir;

    auto* compute = app.add_subcommand("compute", "print a family's values for n = 1..n-max");
    compute->add_option("--family", family_name, "cp, ep, d, ed, cd, edistinct, dd, edd")->required();
    compute->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    compute->add_option("--n-max", n_max, "last n")->required()->check(CLI::PositiveNumber);
    compute->add_option("--format", format_name, "plain, csv, bfile or json")
        ->check(CLI::IsMember({"plain", "csv", "bfile", "json"}, CLI::ignore_case));

    auto* verify = app.add_subcommand("verify", "cross-check series, part sums, oracle and identities");
    verify->add_option("--n-max", vopt.n_max, "oracle range; series checks run to 4*n-max")->capture_default_str();
    verify->add_option("--k-max", vopt.k_max, "largest color count")->capture_default_str();
    verify->add_option("--budget", vopt.budget, "oracle candidate-word budget")->capture_default_str();

    app.add_subcommand("selftest", "recompute the published tables");

    std::size_t oeis_n_max = 50;
    auto* oeis_cmd = app.add_subcommand("oeis", "compare against an OEIS b-file");
    oeis_cmd->add_option("--family", family_name, "family name")->required();
    oeis_cmd->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    oeis_cmd->add_option("--n-max", oeis_n_max, "last n")->check(CLI::PositiveNumber)->capture_default_str();
    oeis_cmd->add_option("--cache-dir", cache_dir, "b-file cache (default $PARTCOLOR_CACHE_DIR or ./.oeis-cache)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    auto family = [&]() -> std::optional<FamilySpec> {
        try {
            return parse_family(family_name);
        } catch (const UnknownFamily& e) {
            err << "error: " << e.what() << "\n";
            return std::nullopt;
        }
    };

    if (compute->parsed()) {
        auto f = family();
        if (!f) return usage_error;
        Format format = Format::plain;
        std::string lowered = CLI::detail::to_lower(format_name);
        if (lowered == "csv") format = Format::csv;
        else if (lowered == "bfile") format = Format::bfile;
        else if (lowered == "json") format = Format::json;
        return cmd_compute(*f, k, n_max, format, out, err);
    }
    if (verify->parsed()) return cmd_verify(vopt, out);
    if (oeis_cmd->parsed()) {
        auto f = family();
        if (!f) return usage_error;
        return cmd_oeis(*f, k, oeis_n_max, cache_dir ? std::filesystem::path(*cache_dir) : oeis::default_cache_dir(),
                        {}, out, err);
    }
    return cmd_selftest(out);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace partcolor::cli
