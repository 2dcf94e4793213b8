#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "anatomy/io.hpp"

using namespace anatomy;

TEST_CASE("bfile round trip") {
    std::vector<uint64_t> seq{4, 6, 8, 9, 16};
    std::ostringstream out;
    write_bfile(out, seq, 1);
    CHECK(out.str() == "1 4\n2 6\n3 8\n4 9\n5 16\n");

    std::istringstream in(out.str());
    auto entries = parse_bfile(in);
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].index == 1);
    CHECK(entries[4].value == 16);
    auto check = check_against_bfile(seq, entries);
    CHECK(check.ok);
    CHECK(check.compared == 5);
}

TEST_CASE("bfile comments and whitespace") {
    std::istringstream in(
        "# OEIS style comment\n"
        "\n"
        "  1 24\n"
        "\t2 48\n"
        "# trailing comment\n");
    auto entries = parse_bfile(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].value == 24);
    CHECK(entries[1].value == 48);
}

TEST_CASE("bfile malformed line throws") {
    std::istringstream in("1 24\ntwo 48\n");
    CHECK_THROWS_AS(parse_bfile(in), std::runtime_error);
}

TEST_CASE("mismatch reporting") {
    std::vector<uint64_t> seq{4, 6, 9};
    std::vector<BFileEntry> entries{{1, 4}, {2, 6}, {3, 8}, {4, 9}};
    auto check = check_against_bfile(seq, entries);
    CHECK_FALSE(check.ok);
    CHECK(check.mismatch_pos == 2);
    CHECK(check.expected == 8);
    CHECK(check.actual == 9);

    // shorter sequence compares only the overlap
    std::vector<uint64_t> prefix{4, 6};
    CHECK(check_against_bfile(prefix, entries).ok);
}

TEST_CASE("csv row") {
    std::ostringstream out;
    write_csv_row(out, {"t", "b1", "vb1"});
    write_csv_row(out, {"100", "17", "14"});
    CHECK(out.str() == "t,b1,vb1\n100,17,14\n");
}
