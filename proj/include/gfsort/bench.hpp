#pragma once

// Benchmark harness: times quicksort and the four guessing-function
// pipelines over seeded data at a ladder of scales, verifies every sorted
// output, and emits CSV plus a human-readable summary. Also hosts the
// empty-box experiment that checks the scatter statistics (fraction of
// empty boxes near 1/e, mean crowd in the non-empty ones near 1/(1-1/e)).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gfsort/datagen.hpp"
#include "gfsort/error.hpp"
#include "gfsort/sort.hpp"

namespace gfsort {

enum class Algorithm {
    quicksort, // comparison baseline
    gf1,       // one pass, two-terminals mapper
    gf1_stat,  // one pass, statistical mapper
    gf2,       // two passes, two-terminals mapper
    gf2_stat,  // two passes, statistical mapper
};

// Accepts the short names (gf1, gf2-stat, ...) and the spelled-out
// aliases (gf1-two-terminals, gf2-statistical, ...).
Algorithm algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm algorithm);

struct BenchConfig {
    std::vector<Algorithm> algorithms;
    std::vector<unsigned> scales = {8, 11, 14, 17, 20}; // exponents, n = 2^k
    // Template for the per-trial data; n and seed are overridden, the
    // seed field acting as the base stream for derive_seed.
    DistributionSpec distribution;
    std::size_t trials = 5;
    std::size_t warmup = 1;
};

struct BenchRow {
    Algorithm algorithm = Algorithm::quicksort;
    std::size_t scale = 0; // record count, 2^k
    DistKind distribution = DistKind::uniform;
    std::size_t trial = 0; // 0-based
    std::uint64_t seed = 0;
    double elapsed_s = 0.0; // wall time of the sort call only
    double empty_box_fraction = 0.0;
    std::uint64_t max_occupancy = 0;
    std::uint64_t cleanup_moves = 0;
};

// Runs every (algorithm, scale, trial) cell sequentially: fresh data per
// trial (identical across algorithms), warmup rounds untimed, output
// verified after the clock stops. A verification failure throws an Error
// naming the algorithm, scale, and seed.
std::vector<BenchRow> run_bench(const BenchConfig& config);

struct EmptyBoxStats {
    double empty_fraction = 0.0; // empty boxes / n
    double mean_occupancy = 0.0; // records per non-empty box
};

// Scatters `keys` over fixed terminals [lo, hi] into n+1 boxes — under
// that map each in-range key is equally likely to land in any of boxes
// 1..n — and reports the empty fraction and mean crowd among those n.
EmptyBoxStats empty_box_stats_of(std::span<const Key> keys, double lo, double hi);

// Averages empty_box_stats_of over `trials` fresh uniform datasets.
EmptyBoxStats empty_box_experiment_stats(std::size_t n, std::size_t trials,
                                         std::uint64_t seed);
// The headline number alone: mean empty-box fraction.
double empty_box_experiment(std::size_t n, std::size_t trials, std::uint64_t seed);

// Header exactly:
// algorithm,scale,distribution,trial,seed,elapsed_s,empty_box_fraction,max_occupancy,cleanup_moves
// One line per row; elapsed_s carries 6 fractional digits.
void write_csv(std::ostream& out, std::span<const BenchRow> rows);
void write_csv(const std::string& path, std::span<const BenchRow> rows);
std::vector<BenchRow> read_csv(std::istream& in);
std::vector<BenchRow> read_csv_file(const std::string& path);

// Median sort time per (algorithm, scale) cell; NaN when the cell is empty.
double median_elapsed(std::span<const BenchRow> rows, Algorithm algorithm,
                      std::size_t scale);

// Per-cell medians plus the two-pass/one-pass cost ratios, for humans.
void print_summary(std::ostream& out, std::span<const BenchRow> rows);

} // namespace gfsort
