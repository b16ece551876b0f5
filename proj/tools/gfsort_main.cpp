// gfsort command-line front end.
//
// Subcommands: sort (record file -> sorted record file with any of the
// five algorithms), gen (seeded data generation), bench (timing harness
// with CSV output), stats (descriptive statistics and scatter census for
// a record file).
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/invalid
// spec, 3 non-finite key.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfsort/bench.hpp"
#include "gfsort/datagen.hpp"
#include "gfsort/mapping.hpp"
#include "gfsort/record_io.hpp"
#include "gfsort/sort.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNonFinite = 3;

struct SortArgs {
    std::string input;
    std::string output;
    std::string algo = "gf1";
    bool verify = false;
};

int run_sort(const SortArgs& args) {
    const gfsort::Algorithm algorithm = gfsort::algorithm_from_name(args.algo);
    const gfsort::RecordFile file = gfsort::read_record_file(args.input);
    std::vector<gfsort::Key> sorted = file.keys;
    switch (algorithm) {
        case gfsort::Algorithm::quicksort:
            gfsort::quicksort_baseline(sorted);
            break;
        case gfsort::Algorithm::gf1:
            gfsort::sort_one_pass(sorted, gfsort::MapperKind::two_terminal);
            break;
        case gfsort::Algorithm::gf1_stat:
            gfsort::sort_one_pass(sorted, gfsort::MapperKind::statistical);
            break;
        case gfsort::Algorithm::gf2:
            gfsort::sort_two_pass(sorted, gfsort::MapperKind::two_terminal);
            break;
        case gfsort::Algorithm::gf2_stat:
            gfsort::sort_two_pass(sorted, gfsort::MapperKind::statistical);
            break;
    }
    if (args.verify && !gfsort::verify_sorted_permutation(sorted, file.keys)) {
        std::cerr << "gfsort: verification failed for " << args.input << "\n";
        return kExitVerify;
    }
    gfsort::write_record_file(args.output, sorted);
    return kExitOk;
}

struct GenArgs {
    gfsort::DistributionSpec spec;
    std::string out;
    std::string kind_name = "uniform";
};

int run_gen(GenArgs& args) {
    args.spec.kind = gfsort::dist_kind_from_name(args.kind_name);
    const std::vector<gfsort::Key> keys = gfsort::generate(args.spec);
    const std::vector<std::string> provenance = {gfsort::describe(args.spec)};
    gfsort::write_record_file(args.out, keys, provenance);
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> algos = {"quicksort", "gf1", "gf1-stat", "gf2",
                                      "gf2-stat"};
    std::vector<unsigned> scales = {8, 11, 14, 17, 20};
    std::string dist = "uniform";
    std::size_t trials = 5;
    std::size_t warmup = 1;
    std::uint64_t seed = 1;
    double lo = -2.0e7;
    double hi = 2.0e7;
    double mean = 0.0;
    double sigma = 1.0;
    std::string out;
};

int run_bench_cmd(const BenchArgs& args) {
    gfsort::BenchConfig config;
    for (const std::string& name : args.algos)
        config.algorithms.push_back(gfsort::algorithm_from_name(name));
    config.scales = args.scales;
    config.trials = args.trials;
    config.warmup = args.warmup;
    config.distribution.kind = gfsort::dist_kind_from_name(args.dist);
    config.distribution.seed = args.seed;
    config.distribution.lo = args.lo;
    config.distribution.hi = args.hi;
    config.distribution.mean = args.mean;
    config.distribution.sigma = args.sigma;
    const std::vector<gfsort::BenchRow> rows = gfsort::run_bench(config);
    if (!args.out.empty()) gfsort::write_csv(args.out, rows);
    gfsort::print_summary(std::cout, rows);
    return kExitOk;
}

int run_stats(const std::string& input) {
    const gfsort::RecordFile file = gfsort::read_record_file(input);
    const std::size_t n = file.keys.size();
    std::cout << "n: " << n << "\n";
    if (n == 0) return kExitOk;
    double mn = file.keys[0], mx = file.keys[0], sum = 0.0;
    for (const double x : file.keys) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
        sum += x;
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const double x : file.keys) ss += (x - mean) * (x - mean);
    const double sigma = std::sqrt(ss / static_cast<double>(n));
    std::cout << "min: " << gfsort::render_key(mn) << "\n"
              << "max: " << gfsort::render_key(mx) << "\n"
              << "mean: " << gfsort::render_key(mean) << "\n"
              << "sigma: " << gfsort::render_key(sigma) << "\n";
    const gfsort::TwoTerminalMapper mapper(mn, mx, n);
    if (mapper.degenerate()) {
        std::cout << "scatter: degenerate mapper (all records to box 1)\n";
        if (n > 1) {
            std::printf("empty_box_fraction: %.6f\n",
                        static_cast<double>(n - 1) / static_cast<double>(n));
            std::cout << "max_occupancy: " << n << "\n";
        }
        return kExitOk;
    }
    const gfsort::BoxTable table = gfsort::BoxTable::build(file.keys, mapper);
    std::printf("empty_box_fraction: %.6f\n",
                static_cast<double>(table.empty_boxes()) /
                    static_cast<double>(n));
    std::cout << "max_occupancy: " << table.max_occupancy() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sorting by guessing functions: sort, generate, benchmark"};
    app.require_subcommand(1);

    SortArgs sort_args;
    CLI::App* sort_cmd =
        app.add_subcommand("sort", "sort a record file");
    sort_cmd->add_option("--input", sort_args.input, "input record file")
        ->required();
    sort_cmd->add_option("--output", sort_args.output, "output record file")
        ->required();
    sort_cmd->add_option("--algo", sort_args.algo,
                         "quicksort|gf1|gf1-stat|gf2|gf2-stat");
    sort_cmd->add_flag("--verify", sort_args.verify,
                       "check the output is a sorted permutation of the input");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a record file");
    gen_cmd->add_option("--dist", gen_args.kind_name,
                        "uniform|gaussian|clustered|constant|sorted-ascending|"
                        "reverse-sorted");
    gen_cmd->add_option("--n", gen_args.spec.n, "record count")->required();
    gen_cmd->add_option("--seed", gen_args.spec.seed, "generator seed");
    gen_cmd->add_option("--lo", gen_args.spec.lo, "uniform lower bound");
    gen_cmd->add_option("--hi", gen_args.spec.hi, "uniform upper bound");
    gen_cmd->add_option("--mean", gen_args.spec.mean, "gaussian mean");
    gen_cmd->add_option("--sigma", gen_args.spec.sigma, "gaussian sigma");
    gen_cmd->add_option("--value", gen_args.spec.value, "constant value");
    gen_cmd->add_option("--centers", gen_args.spec.centers, "cluster centers");
    gen_cmd->add_option("--weights", gen_args.spec.weights,
                        "cluster weights (sum to 1)");
    gen_cmd->add_option("--spread", gen_args.spec.spread, "cluster spread");
    gen_cmd->add_option("--out", gen_args.out, "output record file")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run the timing harness");
    bench_cmd->add_option("--algos", bench_args.algos, "algorithms to run");
    bench_cmd->add_option("--scales", bench_args.scales,
                          "scale exponents (n = 2^k)");
    bench_cmd->add_option("--dist", bench_args.dist, "input distribution kind");
    bench_cmd->add_option("--trials", bench_args.trials, "timed trials per cell");
    bench_cmd->add_option("--warmup", bench_args.warmup, "untimed warmup rounds");
    bench_cmd->add_option("--seed", bench_args.seed, "base seed");
    bench_cmd->add_option("--lo", bench_args.lo, "uniform lower bound");
    bench_cmd->add_option("--hi", bench_args.hi, "uniform upper bound");
    bench_cmd->add_option("--mean", bench_args.mean, "gaussian mean");
    bench_cmd->add_option("--sigma", bench_args.sigma, "gaussian sigma");
    bench_cmd->add_option("--out", bench_args.out, "CSV destination");

    std::string stats_input;
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "describe a record file and its scatter");
    stats_cmd->add_option("--input", stats_input, "input record file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (sort_cmd->parsed()) return run_sort(sort_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (bench_cmd->parsed()) return run_bench_cmd(bench_args);
        if (stats_cmd->parsed()) return run_stats(stats_input);
    } catch (const gfsort::NonFiniteKey& e) {
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitNonFinite;
    } catch (const gfsort::ParseError& e) {
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const gfsort::InvalidSpec& e) {
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const gfsort::IoError& e) {
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const gfsort::Error& e) {
        // Remaining library failures are verification-class aborts.
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "gfsort: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
