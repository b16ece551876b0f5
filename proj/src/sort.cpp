#include "gfsort/sort.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <utility>

namespace gfsort {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::size_t kQuicksortCutoff = 24;

// Orders three pivot candidates in place so the partition scans below
// start with sentinels on both ends.
void sort3(Key& a, Key& b, Key& c) {
    if (b < a) std::swap(a, b);
    if (c < b) {
        std::swap(b, c);
        if (b < a) std::swap(a, b);
    }
}

double mapper_origin(const TwoTerminalMapper& m) { return m.x_min(); }
double mapper_origin(const StatisticalMapper& m) { return m.origin(); }

template <typename Mapper>
SortStats one_pass_impl(std::span<Key> records, const Mapper& mapper) {
    SortStats stats;
    stats.n_records = records.size();

    const auto t_map = Clock::now();
    BoxTable table = BoxTable::build(records, mapper);
    stats.empty_boxes = table.empty_boxes();
    stats.max_occupancy = table.max_occupancy();
    stats.elapsed_map = seconds_since(t_map);

    // The mapping is monotone, so box value ranges never overlap and one
    // adaptive sweep finishes every box without crossing a boundary.
    const auto t_cleanup = Clock::now();
    const std::uint64_t guard = detail::guard_threshold(records.size());
    auto keys = table.keys();
    const auto offsets = table.offsets();
    for (std::size_t b = 1; b <= table.n_boxes(); ++b) {
        const std::uint32_t lo = offsets[b - 1];
        const std::uint32_t count = offsets[b] - lo;
        if (count > guard)
            quicksort_baseline(keys.subspan(lo, count));
    }
    stats.cleanup_moves = insertion_sort_counted(keys);
    std::copy(keys.begin(), keys.end(), records.begin());
    stats.elapsed_cleanup = seconds_since(t_cleanup);
    return stats;
}

template <typename Mapper>
SortStats two_pass_impl(std::span<Key> records, const Mapper& mapper) {
    SortStats stats;
    stats.n_records = records.size();

    const auto t_map = Clock::now();
    BoxTable table = BoxTable::build(records, mapper);
    stats.empty_boxes = table.empty_boxes();
    stats.max_occupancy = table.max_occupancy();

    if (mapper.degenerate()) {
        // One effective box: there is nothing to refine, so hand the
        // untouched input straight to the guard sort.
        stats.elapsed_map = seconds_since(t_map);
        const auto t_cleanup = Clock::now();
        quicksort_baseline(records);
        stats.elapsed_cleanup = seconds_since(t_cleanup);
        return stats;
    }

    const std::size_t nb = table.n_boxes();
    std::vector<std::uint32_t> occupancies(nb);
    for (std::size_t b = 1; b <= nb; ++b)
        occupancies[b - 1] = table.occupancy(b);
    const DistributionArray dist{std::span<const std::uint32_t>(occupancies)};

    // Guess each record's final slot, then counting-sort by slot so
    // colliding guesses land adjacently without displacing other boxes.
    const std::size_t n = records.size();
    const double origin = mapper_origin(mapper);
    const double k_global = mapper.k_global();
    std::vector<std::uint32_t> slot(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t pos = detail::refined_position(
            origin, k_global, dist, table.record_box(i), records[i],
            stats.g2_clamps);
        slot[i] = static_cast<std::uint32_t>(pos - 1);
    }
    std::vector<std::uint32_t> cursor(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++cursor[slot[i] + 1];
    for (std::size_t s = 1; s <= n; ++s) cursor[s] += cursor[s - 1];
    std::vector<Key> placed(n);
    for (std::size_t i = 0; i < n; ++i) placed[cursor[slot[i]]++] = records[i];
    stats.elapsed_map = seconds_since(t_map);

    // Slots stay inside their box's window, so each box still owns the
    // contiguous range [a(b-1), a(b)) of `placed` and crowded boxes can
    // be guard-sorted in isolation before the final sweep.
    const auto t_cleanup = Clock::now();
    const std::uint64_t guard = detail::guard_threshold(n);
    for (std::size_t b = 1; b <= nb; ++b) {
        const std::uint64_t count = dist.occupancy(b);
        if (count > guard)
            quicksort_baseline(
                std::span<Key>(placed).subspan(dist.a(b - 1), count));
    }
    stats.cleanup_moves = insertion_sort_counted(placed);
    std::copy(placed.begin(), placed.end(), records.begin());
    stats.elapsed_cleanup = seconds_since(t_cleanup);
    return stats;
}

} // namespace

void insertion_sort(std::span<Key> records) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Key x = records[i];
        std::size_t j = i;
        while (j > 0 && x < records[j - 1]) {
            records[j] = records[j - 1];
            --j;
        }
        records[j] = x;
    }
}

std::uint64_t insertion_sort_counted(std::span<Key> records) {
    std::uint64_t moves = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Key x = records[i];
        std::size_t j = i;
        while (j > 0 && x < records[j - 1]) {
            records[j] = records[j - 1];
            --j;
            ++moves;
        }
        records[j] = x;
    }
    return moves;
}

void quicksort_baseline(std::span<Key> records) {
    std::size_t lo = 0;
    std::size_t hi = records.size();
    while (hi - lo > kQuicksortCutoff) {
        const std::size_t mid = lo + (hi - lo) / 2;
        sort3(records[lo], records[mid], records[hi - 1]);
        const Key pivot = records[mid];
        std::size_t i = lo;
        std::size_t j = hi - 1;
        while (true) {
            do {
                ++i;
            } while (records[i] < pivot);
            do {
                --j;
            } while (pivot < records[j]);
            if (i >= j) break;
            std::swap(records[i], records[j]);
        }
        // Recurse into the smaller side, iterate on the larger one to
        // keep the stack logarithmic even on skewed splits.
        const std::size_t split = j + 1;
        if (split - lo <= hi - split) {
            quicksort_baseline(records.subspan(lo, split - lo));
            lo = split;
        } else {
            quicksort_baseline(records.subspan(split, hi - split));
            hi = split;
        }
    }
    insertion_sort(records.subspan(lo, hi - lo));
}

SortStats sort_one_pass(std::span<Key> records, MapperKind kind) {
    if (records.empty()) return {};
    if (kind == MapperKind::statistical)
        return one_pass_impl(records, build_statistical_mapper(records));
    return one_pass_impl(records, build_two_terminal_mapper(records));
}

SortStats sort_two_pass(std::span<Key> records, MapperKind kind) {
    if (records.empty()) return {};
    if (kind == MapperKind::statistical)
        return two_pass_impl(records, build_statistical_mapper(records));
    return two_pass_impl(records, build_two_terminal_mapper(records));
}

bool verify_sorted_permutation(std::span<const Key> sorted,
                               std::span<const Key> original) {
    if (sorted.size() != original.size()) return false;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i - 1] <= sorted[i])) return false;
    const auto bit_multiset = [](std::span<const Key> v) {
        std::vector<std::uint64_t> bits(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            bits[i] = std::bit_cast<std::uint64_t>(v[i]);
        std::sort(bits.begin(), bits.end());
        return bits;
    };
    return bit_multiset(sorted) == bit_multiset(original);
}

} // namespace gfsort
