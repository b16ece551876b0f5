#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gfsort/bench.hpp"
#include "gfsort/error.hpp"

using namespace gfsort;

namespace {

constexpr double kEmptyTarget = 0.36787944117144233;   // 1/e
constexpr double kCrowdTarget = 1.5819767068693265;    // 1/(1 - 1/e)

BenchConfig small_config() {
    BenchConfig config;
    config.algorithms = {Algorithm::quicksort, Algorithm::gf1,
                         Algorithm::gf1_stat, Algorithm::gf2,
                         Algorithm::gf2_stat};
    config.scales = {8, 11};
    config.trials = 2;
    config.warmup = 1;
    return config;
}

} // namespace

TEST_CASE("algorithm names round-trip, long aliases included") {
    for (const Algorithm a : {Algorithm::quicksort, Algorithm::gf1,
                              Algorithm::gf1_stat, Algorithm::gf2,
                              Algorithm::gf2_stat}) {
        CHECK(algorithm_from_name(algorithm_name(a)) == a);
    }
    CHECK(algorithm_from_name("gf1-two-terminals") == Algorithm::gf1);
    CHECK(algorithm_from_name("gf1-statistical") == Algorithm::gf1_stat);
    CHECK(algorithm_from_name("gf2-two-terminals") == Algorithm::gf2);
    CHECK(algorithm_from_name("gf2-statistical") == Algorithm::gf2_stat);
    CHECK_THROWS_AS(algorithm_from_name("bogosort"), InvalidSpec);
}

TEST_CASE("run_bench produces one verified row per cell") {
    BenchConfig config;
    config.algorithms = {Algorithm::gf2};
    config.scales = {8};
    config.trials = 1;
    const auto rows = run_bench(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].algorithm == Algorithm::gf2);
    CHECK(rows[0].scale == 256);
    CHECK(rows[0].distribution == DistKind::uniform);
    CHECK(rows[0].trial == 0);
    CHECK(rows[0].elapsed_s >= 0.0);
    CHECK(rows[0].elapsed_s < 60.0);
    CHECK(rows[0].max_occupancy >= 1);
}

TEST_CASE("run_bench grid: shared data per trial, reproducible seeds") {
    const auto config = small_config();
    const auto rows = run_bench(config);
    REQUIRE(rows.size() == 5 * 2 * 2);

    // Within one (scale, trial) cell every algorithm saw the same seed.
    for (const BenchRow& row : rows) {
        for (const BenchRow& other : rows) {
            if (row.scale == other.scale && row.trial == other.trial)
                CHECK(row.seed == other.seed);
        }
    }

    // Rerunning the identical config reproduces the seeds and stats
    // (elapsed times are wall-clock and may differ).
    const auto again = run_bench(config);
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].algorithm == rows[i].algorithm);
        CHECK(again[i].seed == rows[i].seed);
        CHECK(again[i].empty_box_fraction == rows[i].empty_box_fraction);
        CHECK(again[i].max_occupancy == rows[i].max_occupancy);
        CHECK(again[i].cleanup_moves == rows[i].cleanup_moves);
    }

    // Distinct scales draw from distinct seed streams.
    CHECK(rows[0].seed != rows[5 * 2].seed);
}

TEST_CASE("run_bench handles the statistical pipelines on gaussian data") {
    BenchConfig config;
    config.algorithms = {Algorithm::gf1_stat, Algorithm::gf2_stat};
    config.scales = {10};
    config.trials = 1;
    config.distribution.kind = DistKind::gaussian;
    config.distribution.mean = 100.0;
    config.distribution.sigma = 25.0;
    const auto rows = run_bench(config); // throws if any output fails to verify
    CHECK(rows.size() == 2);
    CHECK(rows[0].distribution == DistKind::gaussian);
}

TEST_CASE("run_bench rejects malformed configs") {
    BenchConfig config;
    config.scales = {8};
    config.trials = 1;
    CHECK_THROWS_AS(run_bench(config), InvalidSpec); // no algorithms

    config.algorithms = {Algorithm::gf1};
    config.scales = {};
    CHECK_THROWS_AS(run_bench(config), InvalidSpec); // no scales

    config.scales = {31};
    CHECK_THROWS_AS(run_bench(config), InvalidSpec); // exponent too large

    config.scales = {8};
    config.trials = 0;
    CHECK_THROWS_AS(run_bench(config), InvalidSpec);
}

// ---------------------------------------------------------------------------
// Empty-box experiment.
// ---------------------------------------------------------------------------

TEST_CASE("empty_box_stats_of: constant data crowds a single box") {
    const std::vector<Key> keys(100, 0.0);
    const auto stats = empty_box_stats_of(keys, -2.0e7, 2.0e7);
    CHECK(stats.empty_fraction == 0.99); // 99.0 / 100.0 exactly
    CHECK(stats.mean_occupancy == 100.0);

    CHECK_THROWS_AS(empty_box_stats_of(std::vector<Key>{1.0}, 0.0, 1.0),
                    InvalidSpec);
}

TEST_CASE("empty_box_experiment: two records leave half a box empty a "
          "quarter of the time") {
    // Each trial scores 0.5 when both records share a box (probability
    // 1/2) and 0 otherwise, so the mean is 1/4 with sd 0.25/sqrt(trials).
    const double fraction = empty_box_experiment(2, 4000, 99);
    CHECK(std::abs(fraction - 0.25) < 0.03); // ~7.6 sigma
}

TEST_CASE("empty_box_experiment: large scatter approaches 1/e empties and "
          "1/(1-1/e) crowding") {
    const auto stats = empty_box_experiment_stats(std::size_t{1} << 17, 3, 7);
    CHECK(std::abs(stats.empty_fraction - kEmptyTarget) < 0.01);
    CHECK(std::abs(stats.mean_occupancy - kCrowdTarget) < 0.02);

    CHECK_THROWS_AS(empty_box_experiment_stats(1, 10, 0), InvalidSpec);
    CHECK_THROWS_AS(empty_box_experiment_stats(16, 0, 0), InvalidSpec);
}

// ---------------------------------------------------------------------------
// CSV round-trip.
// ---------------------------------------------------------------------------

namespace {

BenchRow sample_row(Algorithm a, std::size_t scale, std::size_t trial) {
    BenchRow row;
    row.algorithm = a;
    row.scale = scale;
    row.distribution = DistKind::gaussian;
    row.trial = trial;
    row.seed = 0xDEADBEEFCAFEF00DULL;
    row.elapsed_s = 0.001234;
    row.empty_box_fraction = 0.3671875;
    row.max_occupancy = 9;
    row.cleanup_moves = 42;
    return row;
}

} // namespace

TEST_CASE("write_csv emits the exact header and one line per row") {
    std::ostringstream out;
    write_csv(out, std::vector<BenchRow>{});
    CHECK(out.str() ==
          "algorithm,scale,distribution,trial,seed,elapsed_s,"
          "empty_box_fraction,max_occupancy,cleanup_moves\n");

    std::ostringstream two;
    const std::vector<BenchRow> rows = {sample_row(Algorithm::gf1, 256, 0),
                                        sample_row(Algorithm::gf2_stat, 2048, 3)};
    write_csv(two, rows);
    const std::string text = two.str();
    CHECK(text.find("gf1,256,gaussian,0,16045690984503111693,0.001234,"
                    "0.3671875,9,42\n") != std::string::npos);
    CHECK(text.find("gf2-stat,2048,") != std::string::npos);
}

TEST_CASE("CSV write-read-write is byte-idempotent") {
    const std::vector<BenchRow> rows = {sample_row(Algorithm::quicksort, 256, 0),
                                        sample_row(Algorithm::gf2, 256, 1)};
    std::ostringstream first;
    write_csv(first, rows);

    std::istringstream in(first.str());
    const auto parsed = read_csv(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].algorithm == rows[i].algorithm);
        CHECK(parsed[i].scale == rows[i].scale);
        CHECK(parsed[i].distribution == rows[i].distribution);
        CHECK(parsed[i].trial == rows[i].trial);
        CHECK(parsed[i].seed == rows[i].seed);
        CHECK(parsed[i].empty_box_fraction == rows[i].empty_box_fraction);
        CHECK(parsed[i].max_occupancy == rows[i].max_occupancy);
        CHECK(parsed[i].cleanup_moves == rows[i].cleanup_moves);
    }

    std::ostringstream second;
    write_csv(second, parsed);
    CHECK(second.str() == first.str());
}

TEST_CASE("read_csv rejects tampered input with the failing line") {
    std::istringstream bad_header("algorithm,scale\n");
    CHECK_THROWS_AS(read_csv(bad_header), ParseError);
    try {
        std::istringstream again("algorithm,scale\n");
        read_csv(again);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }

    std::istringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), ParseError); // no header at all

    const std::string header =
        "algorithm,scale,distribution,trial,seed,elapsed_s,"
        "empty_box_fraction,max_occupancy,cleanup_moves\n";

    std::istringstream short_line(header + "gf1,256,uniform,0,1\n");
    try {
        read_csv(short_line);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    std::istringstream bad_scale(header +
                                 "gf1,huge,uniform,0,1,0.000001,0.5,2,0\n");
    CHECK_THROWS_AS(read_csv(bad_scale), ParseError);

    std::istringstream bad_algo(header +
                                "bogo,256,uniform,0,1,0.000001,0.5,2,0\n");
    CHECK_THROWS_AS(read_csv(bad_algo), ParseError);

    // Header alone parses to zero rows.
    std::istringstream header_only(header);
    CHECK(read_csv(header_only).empty());
}

// ---------------------------------------------------------------------------
// Medians and the summary.
// ---------------------------------------------------------------------------

TEST_CASE("median_elapsed picks the cell median") {
    std::vector<BenchRow> rows;
    for (const double t : {0.5, 0.1, 0.3}) {
        BenchRow row;
        row.algorithm = Algorithm::gf1;
        row.scale = 256;
        row.elapsed_s = t;
        rows.push_back(row);
    }
    CHECK(median_elapsed(rows, Algorithm::gf1, 256) == 0.3); // odd cell

    BenchRow extra;
    extra.algorithm = Algorithm::gf1;
    extra.scale = 256;
    extra.elapsed_s = 0.7;
    rows.push_back(extra);
    CHECK(median_elapsed(rows, Algorithm::gf1, 256) ==
          doctest::Approx(0.4)); // even cell: mean of 0.3 and 0.5

    CHECK(std::isnan(median_elapsed(rows, Algorithm::gf2, 256)));
    CHECK(std::isnan(median_elapsed(rows, Algorithm::gf1, 1024)));
}

TEST_CASE("sorting cost grows with scale") {
    BenchConfig config;
    config.algorithms = {Algorithm::quicksort, Algorithm::gf1, Algorithm::gf2};
    config.scales = {8, 14};
    config.trials = 5;
    const auto rows = run_bench(config);
    for (const Algorithm a : config.algorithms) {
        const double small = median_elapsed(rows, a, 256);
        const double large = median_elapsed(rows, a, 16384);
        CHECK(large > small); // 64x the records cannot be cheaper
    }
}

TEST_CASE("print_summary reports medians and the two-pass cost ratio") {
    BenchConfig config;
    config.algorithms = {Algorithm::gf1, Algorithm::gf2};
    config.scales = {8};
    config.trials = 2;
    const auto rows = run_bench(config);

    std::ostringstream out;
    print_summary(out, rows);
    const std::string text = out.str();
    CHECK(text.find("algorithm") != std::string::npos);
    CHECK(text.find("gf1") != std::string::npos);
    CHECK(text.find("gf2") != std::string::npos);
    CHECK(text.find("gf2/gf1 elapsed ratio at n=256: ") != std::string::npos);
}
