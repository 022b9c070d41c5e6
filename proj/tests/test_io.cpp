#include "doctest.h"

#include "ssd/io.hpp"

#include "oracle.hpp"

#include <cstdio>
#include <random>
#include <sstream>

using namespace ssd;

TEST_CASE("reading a code file") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "6 2\n"
        "111111\n"
        "110000\n");
    LoadedCode loaded = read_code(in);
    CHECK(loaded.code.length() == 6);
    CHECK(loaded.code.dim() == 2);
    CHECK(loaded.declared_rows == 2);
    CHECK(loaded.warning.empty());
    CHECK(loaded.code.contains(BitVector::from_string("001111")));
}

TEST_CASE("carriage returns and interleaved comments are tolerated") {
    std::istringstream in(
        "4 1\r\n"
        "# rows may be preceded by comments\n"
        "1111\r\n");
    LoadedCode loaded = read_code(in);
    CHECK(loaded.code.dim() == 1);
    CHECK(loaded.code.contains(BitVector::ones(4)));
}

TEST_CASE("dependent rows only warn") {
    std::istringstream in(
        "4 3\n"
        "1100\n"
        "0011\n"
        "1111\n");
    LoadedCode loaded = read_code(in);
    CHECK(loaded.code.dim() == 2);
    CHECK(loaded.declared_rows == 3);
    CHECK_FALSE(loaded.warning.empty());
    CHECK(loaded.warning.find("rank 2") != std::string::npos);
}

TEST_CASE("malformed code files raise parse errors") {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_code(in), parse_error);
    };
    fails("");
    fails("# only a comment\n");
    fails("4\n1111\n");                 // header missing k
    fails("4 1 7\n1111\n");             // trailing junk in the header
    fails("x y\n");                     // non-numeric header
    fails("0 0\n");                     // empty length
    fails("4 -1\n");                    // negative row count
    fails("4 2\n1111\n");               // fewer rows than declared
    fails("4 1\n111\n");                // row too short
    fails("4 1\n11111\n");              // row too long
    fails("4 1\n11a1\n");               // bad character
}

TEST_CASE("parse errors carry the offending line number") {
    std::istringstream in("# intro\n4 1\n11x1\n");
    try {
        read_code(in);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("write and read round trip") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        LinearCode c = LinearCode::from_generators(
            oracle::random_matrix(rng, 1 + static_cast<int>(rng() % 7), n));
        std::ostringstream out;
        write_code(out, c);
        std::istringstream in(out.str());
        CHECK(read_code(in).code == c);
    }
}

TEST_CASE("file variants report unreadable paths") {
    CHECK_THROWS_AS(read_code_file("/nonexistent/path.code"), parse_error);
    CHECK_THROWS_AS(read_involution_file("/nonexistent/path.perm"), parse_error);
}

TEST_CASE("round trip through an actual file") {
    LinearCode c = LinearCode::from_generators(
        BitMatrix::from_strings({"111111", "110000"}));
    const std::string path = "io_roundtrip_tmp.code";
    write_code_file(path, c);
    LoadedCode loaded = read_code_file(path);
    CHECK(loaded.code == c);
    std::remove(path.c_str());
}

TEST_CASE("reading involutions") {
    std::istringstream in("# swap to the right neighbor\n2 1 4 3\n");
    Involution s = read_involution(in);
    CHECK(s.size() == 4);
    CHECK(s.cycle_string() == "(1 2)(3 4)");

    std::istringstream id("1 2 3\n");
    CHECK(read_involution(id).is_identity());

    auto fails = [](const std::string& text) {
        std::istringstream bad(text);
        CHECK_THROWS_AS(read_involution(bad), parse_error);
    };
    fails("");
    fails("2 2\n");        // not a permutation
    fails("2 3 1\n");      // order 3
    fails("0 1\n");        // out of range
    fails("2 x\n");        // not a number
}
