#include "gfsort/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "gfsort/record_io.hpp"

namespace gfsort {

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "quicksort") return Algorithm::quicksort;
    if (name == "gf1" || name == "gf1-two-terminals") return Algorithm::gf1;
    if (name == "gf1-stat" || name == "gf1-statistical") return Algorithm::gf1_stat;
    if (name == "gf2" || name == "gf2-two-terminals") return Algorithm::gf2;
    if (name == "gf2-stat" || name == "gf2-statistical") return Algorithm::gf2_stat;
    throw InvalidSpec("algorithm", "unknown algorithm '" + name + "'");
}

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::quicksort: return "quicksort";
        case Algorithm::gf1: return "gf1";
        case Algorithm::gf1_stat: return "gf1-stat";
        case Algorithm::gf2: return "gf2";
        case Algorithm::gf2_stat: return "gf2-stat";
    }
    throw InvalidSpec("algorithm", "unknown algorithm value");
}

namespace {

using Clock = std::chrono::steady_clock;

// Sorts in place; returns the pipeline stats (zeroed for quicksort,
// which has no boxes to report on).
SortStats dispatch_sort(Algorithm algorithm, std::span<Key> records) {
    switch (algorithm) {
        case Algorithm::quicksort: {
            quicksort_baseline(records);
            SortStats stats;
            stats.n_records = records.size();
            return stats;
        }
        case Algorithm::gf1:
            return sort_one_pass(records, MapperKind::two_terminal);
        case Algorithm::gf1_stat:
            return sort_one_pass(records, MapperKind::statistical);
        case Algorithm::gf2:
            return sort_two_pass(records, MapperKind::two_terminal);
        case Algorithm::gf2_stat:
            return sort_two_pass(records, MapperKind::statistical);
    }
    throw InvalidSpec("algorithm", "unknown algorithm value");
}

void validate_config(const BenchConfig& config) {
    if (config.algorithms.empty())
        throw InvalidSpec("algorithms", "need at least one algorithm");
    if (config.scales.empty())
        throw InvalidSpec("scales", "need at least one scale exponent");
    for (const unsigned k : config.scales)
        if (k > 30) throw InvalidSpec("scales", "exponent above 30 is unsupported");
    if (config.trials < 1) throw InvalidSpec("trials", "need at least one trial");
}

DistributionSpec trial_spec(const BenchConfig& config, unsigned scale_exp,
                            std::uint64_t index) {
    DistributionSpec spec = config.distribution;
    spec.n = std::size_t{1} << scale_exp;
    spec.seed = derive_seed(config.distribution.seed, scale_exp, index);
    return spec;
}

std::string format_elapsed(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", seconds);
    return buf;
}

constexpr char kCsvHeader[] =
    "algorithm,scale,distribution,trial,seed,elapsed_s,empty_box_fraction,"
    "max_occupancy,cleanup_moves";

template <typename T>
T parse_field(const std::string& text, std::size_t line_no, const char* what) {
    T value{};
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ParseError(line_no, std::string("bad ") + what + " field");
    return value;
}

} // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    validate_config(config);
    std::vector<BenchRow> rows;
    rows.reserve(config.scales.size() * config.algorithms.size() * config.trials);
    std::vector<Key> working;
    for (const unsigned scale_exp : config.scales) {
        // Untimed warmup rounds on their own seed stream, so caches and
        // the branch predictor meet each algorithm before the clock does.
        for (std::size_t w = 0; w < config.warmup; ++w) {
            const auto spec = trial_spec(config, scale_exp, 1000000 + w);
            const auto data = generate(spec);
            for (const Algorithm algorithm : config.algorithms) {
                working = data;
                dispatch_sort(algorithm, working);
            }
        }
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            const auto spec = trial_spec(config, scale_exp, trial);
            const auto data = generate(spec);
            for (const Algorithm algorithm : config.algorithms) {
                working = data;
                const auto start = Clock::now();
                const SortStats stats = dispatch_sort(algorithm, working);
                const double elapsed =
                    std::chrono::duration<double>(Clock::now() - start).count();
                if (!verify_sorted_permutation(working, data)) {
                    std::ostringstream what;
                    what << "verification failed: algorithm="
                         << algorithm_name(algorithm) << " scale=" << spec.n
                         << " seed=" << spec.seed;
                    throw Error(what.str());
                }
                BenchRow row;
                row.algorithm = algorithm;
                row.scale = spec.n;
                row.distribution = spec.kind;
                row.trial = trial;
                row.seed = spec.seed;
                row.elapsed_s = elapsed;
                row.empty_box_fraction =
                    spec.n == 0 ? 0.0
                                : static_cast<double>(stats.empty_boxes) /
                                      static_cast<double>(spec.n);
                row.max_occupancy = stats.max_occupancy;
                row.cleanup_moves = stats.cleanup_moves;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

EmptyBoxStats empty_box_stats_of(std::span<const Key> keys, double lo, double hi) {
    const std::size_t n = keys.size();
    if (n < 2) throw InvalidSpec("n", "need at least two records");
    // n+1 boxes over fixed terminals give every key in [lo, hi) the same
    // 1/n chance of each of boxes 1..n; the last box only catches x = hi
    // and stays out of the census.
    const TwoTerminalMapper mapper(lo, hi, n + 1);
    const BoxTable table = BoxTable::build(keys, mapper);
    std::size_t empty = 0;
    std::uint64_t occupied_records = 0;
    for (std::size_t b = 1; b <= n; ++b) {
        const std::uint32_t occ = table.occupancy(b);
        if (occ == 0)
            ++empty;
        else
            occupied_records += occ;
    }
    EmptyBoxStats stats;
    stats.empty_fraction = static_cast<double>(empty) / static_cast<double>(n);
    const std::size_t occupied = n - empty;
    stats.mean_occupancy =
        occupied == 0 ? 0.0
                      : static_cast<double>(occupied_records) /
                            static_cast<double>(occupied);
    return stats;
}

EmptyBoxStats empty_box_experiment_stats(std::size_t n, std::size_t trials,
                                         std::uint64_t seed) {
    if (n < 2) throw InvalidSpec("n", "need at least two records");
    if (trials < 1) throw InvalidSpec("trials", "need at least one trial");
    DistributionSpec spec;
    spec.kind = DistKind::uniform;
    spec.n = n;
    EmptyBoxStats sum;
    for (std::size_t t = 0; t < trials; ++t) {
        spec.seed = derive_seed(seed, 0xEBu, t);
        const auto keys = generate(spec);
        const auto stats = empty_box_stats_of(keys, spec.lo, spec.hi);
        sum.empty_fraction += stats.empty_fraction;
        sum.mean_occupancy += stats.mean_occupancy;
    }
    sum.empty_fraction /= static_cast<double>(trials);
    sum.mean_occupancy /= static_cast<double>(trials);
    return sum;
}

double empty_box_experiment(std::size_t n, std::size_t trials, std::uint64_t seed) {
    return empty_box_experiment_stats(n, trials, seed).empty_fraction;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
    out << kCsvHeader << '\n';
    for (const BenchRow& row : rows) {
        out << algorithm_name(row.algorithm) << ',' << row.scale << ','
            << dist_kind_name(row.distribution) << ',' << row.trial << ','
            << row.seed << ',' << format_elapsed(row.elapsed_s) << ','
            << render_key(row.empty_box_fraction) << ',' << row.max_occupancy
            << ',' << row.cleanup_moves << '\n';
    }
}

void write_csv(const std::string& path, std::span<const BenchRow> rows) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open for writing");
    write_csv(out, rows);
    out.flush();
    if (!out) throw IoError(path, "write failed");
}

std::vector<BenchRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw ParseError(1, "unexpected CSV header");
    std::vector<BenchRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 9) throw ParseError(line_no, "expected 9 fields");
        BenchRow row;
        try {
            row.algorithm = algorithm_from_name(fields[0]);
            row.distribution = dist_kind_from_name(fields[2]);
        } catch (const InvalidSpec& e) {
            throw ParseError(line_no, e.what());
        }
        row.scale = parse_field<std::size_t>(fields[1], line_no, "scale");
        row.trial = parse_field<std::size_t>(fields[3], line_no, "trial");
        row.seed = parse_field<std::uint64_t>(fields[4], line_no, "seed");
        row.elapsed_s = parse_field<double>(fields[5], line_no, "elapsed_s");
        row.empty_box_fraction =
            parse_field<double>(fields[6], line_no, "empty_box_fraction");
        row.max_occupancy =
            parse_field<std::uint64_t>(fields[7], line_no, "max_occupancy");
        row.cleanup_moves =
            parse_field<std::uint64_t>(fields[8], line_no, "cleanup_moves");
        rows.push_back(row);
    }
    return rows;
}

std::vector<BenchRow> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");
    return read_csv(in);
}

double median_elapsed(std::span<const BenchRow> rows, Algorithm algorithm,
                      std::size_t scale) {
    std::vector<double> cell;
    for (const BenchRow& row : rows)
        if (row.algorithm == algorithm && row.scale == scale)
            cell.push_back(row.elapsed_s);
    if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(cell.begin(), cell.end());
    const std::size_t mid = cell.size() / 2;
    return cell.size() % 2 ? cell[mid] : 0.5 * (cell[mid - 1] + cell[mid]);
}

void print_summary(std::ostream& out, std::span<const BenchRow> rows) {
    // Preserve first-seen order of algorithms and scales.
    std::vector<Algorithm> algorithms;
    std::vector<std::size_t> scales;
    for (const BenchRow& row : rows) {
        if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) ==
            algorithms.end())
            algorithms.push_back(row.algorithm);
        if (std::find(scales.begin(), scales.end(), row.scale) == scales.end())
            scales.push_back(row.scale);
    }
    std::sort(scales.begin(), scales.end());

    out << std::left << std::setw(12) << "algorithm" << std::right;
    for (const std::size_t scale : scales) out << std::setw(14) << scale;
    out << '\n';
    out << std::fixed << std::setprecision(6);
    for (const Algorithm algorithm : algorithms) {
        out << std::left << std::setw(12) << algorithm_name(algorithm)
            << std::right;
        for (const std::size_t scale : scales) {
            const double median = median_elapsed(rows, algorithm, scale);
            if (std::isnan(median))
                out << std::setw(14) << "-";
            else
                out << std::setw(14) << median;
        }
        out << '\n';
    }
    out << std::setprecision(2);
    const auto ratio_line = [&](Algorithm hi, Algorithm lo, const char* label) {
        for (const std::size_t scale : scales) {
            const double numer = median_elapsed(rows, hi, scale);
            const double denom = median_elapsed(rows, lo, scale);
            if (std::isnan(numer) || std::isnan(denom) || denom <= 0.0) continue;
            out << label << " elapsed ratio at n=" << scale << ": "
                << numer / denom << '\n';
        }
    };
    ratio_line(Algorithm::gf2, Algorithm::gf1, "gf2/gf1");
    ratio_line(Algorithm::gf2_stat, Algorithm::gf1_stat, "gf2-stat/gf1-stat");
    out.unsetf(std::ios::floatfield);
    out << std::setprecision(6);
}

} // namespace gfsort
