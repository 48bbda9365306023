#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include <partcolor/oeis.hpp>

#include "local_bfile_server.hpp"

using namespace partcolor;
using namespace partcolor::oeis;

namespace {

// Printed table rows with the empty partition prepended at index 0.
const std::string a000041 = "# A000041\n0 1\n1 1\n2 2\n3 3\n4 5\n5 7\n6 11\n7 15\n8 22\n9 30\n10 42\n";
const std::string a070933 = "0 1\n1 2\n2 6\n3 14\n4 34\n5 74\n6 166\n7 350\n8 746\n9 1546\n";
const std::string a032308 = "0 1\n1 3\n2 3\n3 12\n4 12\n5 21\n6 48\n";

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("parse b-files", "[oeis]") {
    CHECK(parse_bfile("0 1\n1 1\n2 2\n").entries == std::vector<BFileEntry>{{0, 1}, {1, 1}, {2, 2}});
    CHECK(parse_bfile("# comment\n1 2\n").entries == std::vector<BFileEntry>{{1, 2}});
    CHECK(parse_bfile("\n  \n# x\n5\t-7\r\n6   123456789012345678901234567890\n").entries ==
          std::vector<BFileEntry>{{5, -7}, {6, BigInt("123456789012345678901234567890")}});
    CHECK(parse_bfile("").entries.empty());

    CHECK_THROWS_AS(parse_bfile("1 2\n1 3\n"), FormatError);
    CHECK_THROWS_AS(parse_bfile("2 2\n1 3\n"), FormatError);
    try {
        parse_bfile("0 1\n# ok\nnot a line\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_bfile("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1 2x\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1x 2\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("7\n"), ParseError);
}

TEST_CASE("render then parse is the identity", "[oeis][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BFile b;
        std::int64_t index = std::uniform_int_distribution<int>(-5, 5)(rng);
        const int len = std::uniform_int_distribution<int>(0, 40)(rng);
        for (int i = 0; i < len; ++i) {
            index += std::uniform_int_distribution<int>(1, 3)(rng);
            BigInt v = ipow(std::uniform_int_distribution<int>(2, 9)(rng), std::uniform_int_distribution<int>(0, 90)(rng));
            if (rng() % 3 == 0) v = -v;
            b.entries.push_back({index, v});
        }
        CHECK(parse_bfile(render_bfile(b)) == b);
    }
}

TEST_CASE("sequence ids", "[oeis]") {
    CHECK(valid_sequence_id("A000041"));
    CHECK_FALSE(valid_sequence_id("A99999999"));
    CHECK_FALSE(valid_sequence_id("a000041"));
    CHECK_FALSE(valid_sequence_id("A00004"));
    CHECK(bfile_url_path("A070933") == "/A070933/b070933.txt");
}

TEST_CASE("preloaded mappings", "[oeis]") {
    CHECK(known_mappings().size() == 10);
    CHECK(find_mapping(families::cp, 2)->sequence_id == "A070933");
    CHECK(find_mapping(families::d, 2)->sequence_id == "A139582");
    CHECK(find_mapping(families::cd, 5)->sequence_id == "A261569");
    CHECK_FALSE(find_mapping(families::dd, 3).has_value());
    CHECK_FALSE(find_mapping(families::ep, 2).has_value());
    CHECK_FALSE(find_mapping(families::d, 3).has_value());
}

TEST_CASE("compare aligns n with the OEIS index", "[oeis]") {
    const auto cp2 = sequence(families::cp, 2, 9);
    auto r = compare(cp2, parse_bfile(a070933, "A070933"), 1);
    CHECK(r.matched());
    CHECK(r.overlap == 9);

    const auto cd3 = sequence(families::cd, 3, 6);
    CHECK(compare(cd3, parse_bfile(a032308), *find_mapping(families::cd, 3)).matched());

    SECTION("a perturbed value is one mismatch") {
        auto bad = cp2;
        bad.values[2] += 1;
        const auto diff = compare(bad, parse_bfile(a070933), 1);
        CHECK(diff.verdict == Verdict::mismatch);
        REQUIRE(diff.mismatches == 1);
        CHECK(diff.cells[2].n == 3);
        CHECK(diff.cells[2].status == CellStatus::mismatch);
    }
    SECTION("entries beyond the b-file are missing, not mismatched") {
        const auto longer = sequence(families::cp, 2, 12);
        const auto diff = compare(longer, parse_bfile(a070933), 1);
        CHECK(diff.matched());
        CHECK(diff.overlap == 9);
        CHECK(diff.cells[11].status == CellStatus::missing);
    }
    SECTION("no overlap is never a match") {
        const auto diff = compare(cp2, parse_bfile(a070933), 100);
        CHECK(diff.verdict == Verdict::empty_overlap);
        CHECK_FALSE(diff.matched());
        CHECK(compare(cp2, BFile{}, 1).verdict == Verdict::empty_overlap);
    }
    SECTION("wrong offset shows mismatches") {
        CHECK(compare(cp2, parse_bfile(a070933), 0).verdict == Verdict::mismatch);
    }
}

TEST_CASE("auto alignment", "[oeis]") {
    const auto cp2 = sequence(families::cp, 2, 9);
    CHECK(auto_align(cp2, parse_bfile(a070933)) == 1);
    // P(1) = 1 also equals a(0), so auto alignment lands one too early and must report it
    const auto p = sequence(families::cp, 1, 10);
    OeisMapping unset{families::cp, 1, "A000041", std::nullopt};
    CHECK(compare(p, parse_bfile(a000041), unset).verdict == Verdict::mismatch);
    CHECK(compare(p, parse_bfile(a000041), *find_mapping(families::cp, 1)).matched());
}

TEST_CASE("fetch caches atomically and serves repeats from disk", "[oeis][network-local]") {
    LocalBFileServer server(LocalBFileServer::Files{{"A000041", a000041}, {"A070933", a070933}});
    TempDir cache;
    const FetchOptions opts{server.url(), 5};

    const auto first = fetch_bfile_ex("A000041", cache.path(), opts);
    CHECK_FALSE(first.from_cache);
    REQUIRE(first.bfile.entries.size() >= 5);
    CHECK(std::vector<BFileEntry>(first.bfile.entries.begin(), first.bfile.entries.begin() + 5) ==
          std::vector<BFileEntry>{{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 5}});
    CHECK(server.requests() == 1);
    CHECK(slurp(cache_path(cache.path(), "A000041")) == a000041);

    const auto second = fetch_bfile_ex("A000041", cache.path(), opts);
    CHECK(second.from_cache);
    CHECK(second.bfile == first.bfile);
    CHECK(server.requests() == 1);

    // no stray temporaries
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(cache.path())) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);

    SECTION("compare is identical from network or cache") {
        const auto p = sequence(families::cp, 1, 10);
        const auto m = *find_mapping(families::cp, 1);
        CHECK(format_report(compare(p, first.bfile, m)) == format_report(compare(p, second.bfile, m)));
    }
}

TEST_CASE("fetch errors", "[oeis][network-local]") {
    TempDir cache;
    CHECK_THROWS_AS(fetch_bfile("A99999999", cache.path()), MalformedId);
    {
        LocalBFileServer server(LocalBFileServer::Files{});
        try {
            fetch_bfile("A000042", cache.path(), {server.url(), 5});
            FAIL("expected a fetch error");
        } catch (const FetchError& e) {
            CHECK(e.status() == 404);
        }
        CHECK_FALSE(std::filesystem::exists(cache_path(cache.path(), "A000042")));
    }
    {
        LocalBFileServer server(LocalBFileServer::Files{{"A000043", "garbage line here\n"}});
        CHECK_THROWS_AS(fetch_bfile("A000043", cache.path(), {server.url(), 5}), ParseError);
        CHECK_FALSE(std::filesystem::exists(cache_path(cache.path(), "A000043")));
    }
    // nothing listens on port 1
    CHECK_THROWS_AS(fetch_bfile("A000041", cache.path(), {"http://127.0.0.1:1", 2}), FetchError);
}

TEST_CASE("cache directory resolution", "[oeis]") {
    ::setenv("PARTCOLOR_CACHE_DIR", "/tmp/somewhere", 1);
    CHECK(default_cache_dir() == "/tmp/somewhere");
    ::unsetenv("PARTCOLOR_CACHE_DIR");
    CHECK(default_cache_dir() == ".oeis-cache");
}
