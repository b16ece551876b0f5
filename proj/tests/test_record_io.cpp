#include <doctest.h>

#include <unistd.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gfsort/datagen.hpp"
#include "gfsort/error.hpp"
#include "gfsort/record_io.hpp"

using namespace gfsort;

namespace {

// Random finite doubles with raw bit patterns, so round-trip coverage
// includes subnormals, huge magnitudes, and negative zero.
std::vector<Key> random_finite_keys(std::size_t count, std::uint64_t seed) {
    Xoshiro256PlusPlus rng(seed);
    std::vector<Key> keys;
    keys.reserve(count);
    while (keys.size() < count) {
        const double x = std::bit_cast<double>(rng.next());
        if (std::isfinite(x)) keys.push_back(x);
    }
    return keys;
}

struct TempPath {
    std::filesystem::path path;
    explicit TempPath(const char* stem) {
        path = std::filesystem::temp_directory_path() /
               (std::string(stem) + "-" + std::to_string(::getpid()) + ".txt");
    }
    ~TempPath() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

} // namespace

TEST_CASE("render_key produces shortest round-trip decimals") {
    CHECK(render_key(1.0) == "1");
    CHECK(render_key(0.5) == "0.5");
    CHECK(render_key(-0.0) == "-0");
    CHECK(render_key(0.1) == "0.1"); // not 0.1000000000000000055...
    CHECK(render_key(1e300) == "1e+300");

    // Rendering then parsing is the identity on bits.
    for (const Key x : random_finite_keys(10000, 41)) {
        const Key back = parse_key_line(render_key(x), 1);
        CHECK(std::bit_cast<std::uint64_t>(back) ==
              std::bit_cast<std::uint64_t>(x));
    }
}

TEST_CASE("parse_key_line tolerates cosmetic variation") {
    CHECK(parse_key_line("+3.5", 1) == 3.5);
    CHECK(parse_key_line("  42  ", 1) == 42.0);
    CHECK(parse_key_line("\t-0.25\t", 1) == -0.25);
    CHECK(parse_key_line("6.02e23", 1) == 6.02e23);
    CHECK(parse_key_line("1E-3", 1) == 1e-3);
}

TEST_CASE("parse_key_line rejects non-numeric and non-finite input") {
    CHECK_THROWS_AS(parse_key_line("abc", 3), ParseError);
    CHECK_THROWS_AS(parse_key_line("", 1), ParseError);
    CHECK_THROWS_AS(parse_key_line("1.5x", 1), ParseError); // trailing junk
    CHECK_THROWS_AS(parse_key_line("1,5", 1), ParseError);
    CHECK_THROWS_AS(parse_key_line("1e999", 2), ParseError); // overflows
    CHECK_THROWS_AS(parse_key_line("nan", 1), NonFiniteKey);
    CHECK_THROWS_AS(parse_key_line("inf", 1), NonFiniteKey);
    CHECK_THROWS_AS(parse_key_line("-inf", 1), NonFiniteKey);

    try {
        parse_key_line("bogus", 17);
    } catch (const ParseError& e) {
        CHECK(e.line() == 17);
    }
    try {
        parse_key_line("nan", 9);
    } catch (const NonFiniteKey& e) {
        CHECK(e.index() == 9);
    }
}

TEST_CASE("read_records handles comments, blanks, and CRLF") {
    std::istringstream in(
        "# made by hand\r\n"
        "#no space after hash\n"
        "\n"
        "1.5\r\n"
        "\n"
        "-2\n");
    const RecordFile file = read_records(in);
    REQUIRE(file.comments.size() == 2);
    CHECK(file.comments[0] == "made by hand");
    CHECK(file.comments[1] == "no space after hash");
    CHECK(file.keys == std::vector<Key>{1.5, -2.0});
}

TEST_CASE("read_records reports the 1-based failing line") {
    std::istringstream in("1\n2\noops\n4\n");
    try {
        read_records(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("empty input yields an empty record set") {
    std::istringstream in("");
    const RecordFile file = read_records(in);
    CHECK(file.comments.empty());
    CHECK(file.keys.empty());

    std::istringstream only_comments("# nothing here\n");
    CHECK(read_records(only_comments).keys.empty());
}

TEST_CASE("write_records emits comments then keys") {
    std::ostringstream out;
    const std::vector<Key> keys = {1.0, -0.5};
    const std::vector<std::string> comments = {"alpha", "beta"};
    write_records(out, keys, comments);
    CHECK(out.str() == "# alpha\n# beta\n1\n-0.5\n");
}

TEST_CASE("file round-trip is bit-exact for arbitrary finite keys") {
    const auto keys = random_finite_keys(10000, 77);
    TempPath tmp("gfsort-io-roundtrip");
    const std::vector<std::string> comments = {"round-trip check"};
    write_record_file(tmp.path.string(), keys, comments);

    const RecordFile back = read_record_file(tmp.path.string());
    CHECK(back.comments == comments);
    REQUIRE(back.keys.size() == keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        CHECK(std::bit_cast<std::uint64_t>(back.keys[i]) ==
              std::bit_cast<std::uint64_t>(keys[i]));
    }
}

TEST_CASE("missing paths raise IoError with the path attached") {
    const std::string bogus = "/nonexistent-dir-zz/records.txt";
    CHECK_THROWS_AS(read_record_file(bogus), IoError);
    CHECK_THROWS_AS(write_record_file(bogus, std::vector<Key>{1.0}), IoError);
    try {
        read_record_file(bogus);
    } catch (const IoError& e) {
        CHECK(e.path() == bogus);
    }
}
