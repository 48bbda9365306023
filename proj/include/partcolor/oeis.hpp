#pragma once

// OEIS b-file handling: parsing, a file cache, HTTP fetch, and alignment
// against locally computed sequences. This is the only networked code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <httplib.h>

#include "bigint.hpp"
#include "families.hpp"
#include "family.hpp"

namespace partcolor::oeis {

struct BFileEntry {
    std::int64_t index;
    BigInt value;

    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    std::string sequence_id;
    std::vector<BFileEntry> entries;

    bool operator==(const BFile&) const = default;

    const BigInt* find(std::int64_t index) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), index,
                                   [](const BFileEntry& e, std::int64_t i) { return e.index < i; });
        return it != entries.end() && it->index == index ? &it->value : nullptr;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Indices not strictly increasing.
class FormatError : public ParseError {
public:
    using ParseError::ParseError;
};

class FetchError : public std::runtime_error {
public:
    explicit FetchError(const std::string& what, std::optional<int> status = std::nullopt)
        : std::runtime_error(what), status_(status) {}
    std::optional<int> status() const noexcept { return status_; }

private:
    std::optional<int> status_;
};

class MalformedId : public std::invalid_argument {
public:
    explicit MalformedId(std::string_view id)
        : std::invalid_argument("malformed OEIS id '" + std::string(id) + "' (expected A followed by 6 digits)") {}
};

inline bool valid_sequence_id(std::string_view id) {
    static const std::regex pattern("A[0-9]{6}");
    return std::regex_match(id.begin(), id.end(), pattern);
}

inline BFile parse_bfile(std::string_view text, std::string sequence_id = {}) {
    BFile out{std::move(sequence_id), {}};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text >> value_text) || (fields >> extra)) {
            throw ParseError(line_no, "expected 'index value', got '" + line + "'");
        }
        BFileEntry entry;
        try {
            std::size_t used = 0;
            entry.index = std::stoll(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument("trailing characters");
            entry.value = parse_decimal(value_text);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed number in '" + line + "'");
        }
        if (!out.entries.empty() && entry.index <= out.entries.back().index) {
            throw FormatError(line_no, "index " + std::to_string(entry.index) + " does not increase");
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

inline std::string render_bfile(const BFile& b) {
    std::string out;
    for (const auto& e : b.entries) out += std::to_string(e.index) + " " + to_decimal(e.value) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// mappings

struct OeisMapping {
    FamilySpec family;
    std::size_t k;
    std::string sequence_id;
    /// OEIS index matching our n = 1; unset means auto-align on the first value.
    std::optional<std::int64_t> index_offset;
};

/// Identifications printed alongside the tables. All of these sequences start
/// at a(0) with the empty partition, so n = 1 sits at index 1.
inline const std::vector<OeisMapping>& known_mappings() {
    static const std::vector<OeisMapping> table{
        {families::cp, 1, "A000041", 1}, {families::cp, 2, "A070933", 1},
        {families::cp, 3, "A242587", 1}, {families::cp, 4, "A246936", 1},
        {families::cd, 1, "A000009", 1}, {families::cd, 2, "A032302", 1},
        {families::cd, 3, "A032308", 1}, {families::cd, 4, "A261568", 1},
        {families::cd, 5, "A261569", 1}, {families::d, 2, "A139582", 1},
    };
    return table;
}

inline std::optional<OeisMapping> find_mapping(FamilySpec family, std::size_t k) {
    for (const auto& m : known_mappings()) {
        if (m.family == family && m.k == k) return m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// cache and fetch

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("PARTCOLOR_CACHE_DIR"); env != nullptr && *env != '\0') return env;
    return ".oeis-cache";
}

inline std::filesystem::path cache_path(const std::filesystem::path& cache_dir, std::string_view id) {
    return cache_dir / (std::string(id) + ".txt");
}

inline std::string bfile_url_path(std::string_view id) {
    return "/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
}

namespace detail {

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Temp file in the same directory, then rename, so readers never see a partial file.
inline void write_atomically(const std::filesystem::path& target, std::string_view bytes) {
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FetchError("cannot write cache file " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw FetchError("cannot write cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw FetchError("cannot move cache file into place: " + target.string());
    }
}

}  // namespace detail

struct FetchOptions {
    std::string base_url = "https://oeis.org";
    int timeout_seconds = 30;
};

struct FetchResult {
    BFile bfile;
    bool from_cache = false;
};

inline FetchResult fetch_bfile_ex(std::string_view id, const std::filesystem::path& cache_dir,
                                  const FetchOptions& options = {}) {
    if (!valid_sequence_id(id)) throw MalformedId(id);
    const auto path = cache_path(cache_dir, id);
    if (auto cached = detail::read_file(path)) return {parse_bfile(*cached, std::string(id)), true};

    httplib::Client client(options.base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(options.timeout_seconds, 0);
    client.set_read_timeout(options.timeout_seconds, 0);
    auto res = client.Get(bfile_url_path(id));
    if (!res) {
        throw FetchError("fetching " + std::string(id) + " from " + options.base_url +
                         " failed: " + httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
        throw FetchError("fetching " + std::string(id) + " returned HTTP " + std::to_string(res->status),
                         res->status);
    }
    // parse before caching so a garbage response never lands in the cache
    BFile parsed = parse_bfile(res->body, std::string(id));
    detail::write_atomically(path, res->body);
    return {std::move(parsed), false};
}

inline BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir,
                         const FetchOptions& options = {}) {
    return fetch_bfile_ex(id, cache_dir, options).bfile;
}

// ---------------------------------------------------------------------------
// comparison

enum class CellStatus { equal, mismatch, missing };

struct DiffCell {
    std::size_t n;
    std::int64_t index;
    BigInt ours;
    std::optional<BigInt> theirs;
    CellStatus status;
};

enum class Verdict { match, mismatch, empty_overlap };

struct DiffReport {
    std::string sequence_id;
    std::int64_t index_offset = 0;
    std::vector<DiffCell> cells;
    std::size_t overlap = 0;
    std::size_t mismatches = 0;
    Verdict verdict = Verdict::empty_overlap;

    bool matched() const noexcept { return verdict == Verdict::match; }
};

inline DiffReport compare(const SequenceRecord& record, const BFile& bfile, std::int64_t index_offset) {
    DiffReport report;
    report.sequence_id = bfile.sequence_id;
    report.index_offset = index_offset;
    for (std::size_t i = 0; i < record.values.size(); ++i) {
        const std::size_t n = record.start_n + i;
        const std::int64_t index = static_cast<std::int64_t>(n) - 1 + index_offset;
        DiffCell cell{n, index, record.values[i], std::nullopt, CellStatus::missing};
        if (const BigInt* v = bfile.find(index)) {
            cell.theirs = *v;
            cell.status = *v == record.values[i] ? CellStatus::equal : CellStatus::mismatch;
            ++report.overlap;
            if (cell.status == CellStatus::mismatch) ++report.mismatches;
        }
        report.cells.push_back(std::move(cell));
    }
    if (report.overlap == 0) report.verdict = Verdict::empty_overlap;
    else report.verdict = report.mismatches == 0 ? Verdict::match : Verdict::mismatch;
    return report;
}

/// Offset that puts our first value on the first b-file entry carrying it.
inline std::optional<std::int64_t> auto_align(const SequenceRecord& record, const BFile& bfile) {
    if (record.values.empty()) return std::nullopt;
    for (const auto& e : bfile.entries) {
        if (e.value == record.values.front()) return e.index;
    }
    return std::nullopt;
}

inline DiffReport compare(const SequenceRecord& record, const BFile& bfile, const OeisMapping& mapping) {
    if (mapping.index_offset) return compare(record, bfile, *mapping.index_offset);
    if (auto offset = auto_align(record, bfile)) return compare(record, bfile, *offset);
    DiffReport report;
    report.sequence_id = bfile.sequence_id;
    report.verdict = Verdict::empty_overlap;
    return report;
}

inline std::string format_report(const DiffReport& r) {
    std::ostringstream out;
    for (const auto& c : r.cells) {
        if (c.status == CellStatus::mismatch) {
            out << "mismatch n=" << c.n << " (index " << c.index << "): ours " << to_decimal(c.ours)
                << ", oeis " << to_decimal(*c.theirs) << "\n";
        }
    }
    std::size_t missing = 0;
    for (const auto& c : r.cells) missing += c.status == CellStatus::missing;
    out << r.sequence_id << " offset " << r.index_offset << ": " << r.overlap << " compared, "
        << r.mismatches << " mismatched, " << missing << " missing -> ";
    switch (r.verdict) {
        case Verdict::match: out << "match"; break;
        case Verdict::mismatch: out << "MISMATCH"; break;
        case Verdict::empty_overlap: out << "EMPTY OVERLAP"; break;
    }
    out << "\n";
    return out.str();
}

}  // namespace partcolor::oeis
