#pragma once

// Sorting pipelines built on the guessing functions.
//
// One pass: scatter every record into its guessed box. Two passes:
// scatter, build the distribution array, and regroup by each record's
// refined per-box slot. Either way the grouped buffer is finished with a
// single adaptive insertion sweep, and both pipelines divert a
// pathologically crowded box to quicksort first so adversarial inputs
// degrade to O(n log n) instead of O(n^2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gfsort/error.hpp"
#include "gfsort/mapping.hpp"

namespace gfsort {

namespace detail {

// Hint that `p` is about to be written. The scatter loops touch a few
// megabytes in value order, i.e. randomly, and stall on cache latency
// unless the lines are requested a little ahead of use.
inline void prefetch_write(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_prefetch(p, 1);
#else
    (void)p;
#endif
}

} // namespace detail

// Which function-I variant drives a pipeline.
enum class MapperKind {
    two_terminal, // anchored at the observed min/max
    statistical,  // anchored at mean +/- 3*sigma with clamping
};

// Counters and phase timings reported by the pipelines.
struct SortStats {
    std::uint64_t n_records = 0;
    std::uint64_t empty_boxes = 0;    // boxes no record mapped into
    std::uint64_t max_occupancy = 0;  // most crowded box
    std::uint64_t cleanup_moves = 0;  // element shifts spent in insertion passes
    std::uint64_t g2_clamps = 0;      // refined slots pulled back into their box
    double elapsed_map = 0.0;         // seconds: mapper build + placement
    double elapsed_cleanup = 0.0;     // seconds: finishing sorts
};

// Result of scattering records into boxes: the records grouped by box in
// one flat buffer, plus each input record's box for a later refinement
// pass. Box indices are 1-based; offsets() is the prefix-sum view, so
// box n occupies keys()[offsets()[n-1] .. offsets()[n]).
class BoxTable {
public:
    template <typename Mapper>
    static BoxTable build(std::span<const Key> records, const Mapper& mapper) {
        if (records.size() > std::numeric_limits<std::uint32_t>::max())
            throw InvalidSpec("records", "scatter supports at most 2^32-1 records");
        BoxTable t;
        const std::size_t n = records.size();
        const std::size_t nb = mapper.n_boxes();
        t.offsets_.assign(nb + 1, 0);
        t.record_box_.resize(n);
        t.keys_.resize(n);
        // The loops below go through local pointers: spelled as member
        // accesses, the compiler has to assume the counter stores may
        // alias the vector anchors and reloads them every iteration.
        std::uint32_t* const counts = t.offsets_.data();
        std::uint32_t* const rbox = t.record_box_.data();
        Key* const keys = t.keys_.data();
        if (mapper.degenerate()) {
            // No usable slope: everything belongs to box 1.
            std::fill(rbox, rbox + n, 1u);
            counts[1] = static_cast<std::uint32_t>(n);
        } else {
            // Count with the box computed kAhead records early, so its
            // counter line is prefetched by the time it is incremented.
            constexpr std::size_t kAhead = 64;
            const std::size_t head = n < kAhead ? n : kAhead;
            for (std::size_t i = 0; i < head; ++i)
                rbox[i] = static_cast<std::uint32_t>(mapper.map(records[i]));
            for (std::size_t i = 0; i < n; ++i) {
                if (i + kAhead < n) {
                    const auto b = static_cast<std::uint32_t>(
                        mapper.map(records[i + kAhead]));
                    rbox[i + kAhead] = b;
                    detail::prefetch_write(&counts[b]);
                }
                ++counts[rbox[i]];
            }
        }
        // Turn counts into box start cursors, collecting stats on the way.
        std::uint32_t run = 0;
        for (std::size_t b = 1; b <= nb; ++b) {
            const std::uint32_t count = counts[b];
            if (count == 0) ++t.empty_boxes_;
            if (count > t.max_occupancy_) t.max_occupancy_ = count;
            counts[b] = run;
            run += count;
        }
        // Stable placement; each cursor ends at its box's end, leaving
        // offsets_ as the inclusive prefix sums. Cursors are fetched
        // further ahead than key slots because the slot address needs the
        // cursor's value; a cursor may advance between prefetch and use,
        // but the line it names stays the right one.
        constexpr std::size_t kCursorAhead = 96;
        constexpr std::size_t kSlotAhead = 32;
        const std::size_t main_end = n > kCursorAhead ? n - kCursorAhead : 0;
        std::size_t i = 0;
        for (; i < main_end; ++i) {
            detail::prefetch_write(&counts[rbox[i + kCursorAhead]]);
            detail::prefetch_write(&keys[counts[rbox[i + kSlotAhead]]]);
            keys[counts[rbox[i]]++] = records[i];
        }
        for (; i < n; ++i) keys[counts[rbox[i]]++] = records[i];
        return t;
    }

    std::size_t n_boxes() const noexcept { return offsets_.size() - 1; }
    std::uint64_t n_records() const noexcept { return keys_.size(); }
    std::uint64_t empty_boxes() const noexcept { return empty_boxes_; }
    std::uint64_t max_occupancy() const noexcept { return max_occupancy_; }

    std::uint32_t occupancy(std::size_t n) const {
        return offsets_.at(n) - offsets_.at(n - 1);
    }
    std::span<const Key> box(std::size_t n) const {
        return std::span<const Key>(keys_).subspan(offsets_.at(n - 1), occupancy(n));
    }
    // Box the i-th input record mapped into (1-based).
    std::uint32_t record_box(std::size_t i) const { return record_box_.at(i); }

    std::span<const std::uint32_t> offsets() const noexcept { return offsets_; }
    std::span<const Key> keys() const noexcept { return keys_; }
    std::span<Key> keys() noexcept { return keys_; }

private:
    BoxTable() = default;

    std::vector<Key> keys_;                // grouped by box
    std::vector<std::uint32_t> offsets_;   // size n_boxes+1, offsets_[0] = 0
    std::vector<std::uint32_t> record_box_; // per input record
    std::uint64_t empty_boxes_ = 0;
    std::uint64_t max_occupancy_ = 0;
};

template <typename Mapper>
BoxTable scatter(std::span<const Key> records, const Mapper& mapper) {
    return BoxTable::build(records, mapper);
}

namespace detail {

// Occupancy above this sends a box to quicksort instead of the insertion
// finisher, keeping crafted pile-ups at O(n log n).
inline std::uint64_t guard_threshold(std::size_t n) {
    const auto root =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    return root > 64 ? root : 64;
}

} // namespace detail

void insertion_sort(std::span<Key> records);
// Same, reporting the number of element shifts performed.
std::uint64_t insertion_sort_counted(std::span<Key> records);

// Median-of-three quicksort with an insertion-sort tail; the comparison
// baseline the guessing pipelines are measured against.
void quicksort_baseline(std::span<Key> records);

// In-place pipelines. Empty input is a no-op; non-finite keys throw.
SortStats sort_one_pass(std::span<Key> records,
                        MapperKind kind = MapperKind::two_terminal);
SortStats sort_two_pass(std::span<Key> records,
                        MapperKind kind = MapperKind::two_terminal);

// True iff `sorted` is non-decreasing and holds exactly the same multiset
// of bit patterns as `original`.
bool verify_sorted_permutation(std::span<const Key> sorted,
                               std::span<const Key> original);

} // namespace gfsort
