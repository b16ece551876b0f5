#pragma once

// Guessing functions: value -> position maps that place a record by
// arithmetic instead of comparisons.
//
// Function I is a single linear map over the whole key range. Two builds
// are provided: the two-terminals form anchored at (x_min, 1) and
// (x_max, N), and the statistical form that spans the window
// (mean - 3*sigma, mean + 3*sigma) with slope N/(6*sigma) and clamps.
//
// Function II refines function I per box: after a first scatter, the
// prefix-sum distribution array bounds each record's final position to
// [A[n-1]+1, A[n]], and a per-box linear map with the local tangent
// k_global*(A[n]-A[n-1]-1) picks the slot inside that window.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gfsort/error.hpp"

namespace gfsort {

// The unit being sorted: a finite IEEE 754 binary64 value.
using Key = double;

namespace detail {

// Throws NonFiniteKey naming the first offending index; returns min/max.
struct Extrema {
    Key min;
    Key max;
};
Extrema scan_extrema(std::span<const Key> records);

} // namespace detail

// Linear map with terminals (x_min, 1) and (x_max, N).
// k_global = (N-1)/(x_max-x_min); degenerate when the slope is unusable.
class TwoTerminalMapper {
public:
    // Terminals given directly; n_boxes >= 1 required.
    TwoTerminalMapper(Key x_min, Key x_max, std::size_t n_boxes);

    Key x_min() const noexcept { return x_min_; }
    Key x_max() const noexcept { return x_max_; }
    std::size_t n_boxes() const noexcept { return n_boxes_; }
    double k_global() const noexcept { return k_global_; }
    bool degenerate() const noexcept { return degenerate_; }

    // g1(x) = floor((x - x_min) * k_global) + 1, clamped to N so the
    // x = x_max floating edge cannot escape the last box. The clamp is
    // checked before the integer cast: with a subnormal slope over a
    // huge range the product can reach infinity.
    std::size_t map(Key x) const {
        if (degenerate_) throw DegenerateMapper();
        if (!(x >= x_min_) || !(x <= x_max_)) throw OutOfRange(x, x_min_, x_max_);
        if (x == x_max_) return n_boxes_;
        const double f = std::floor((x - x_min_) * k_global_);
        if (f >= static_cast<double>(n_boxes_)) return n_boxes_;
        return static_cast<std::size_t>(f) + 1;
    }

private:
    Key x_min_;
    Key x_max_;
    std::size_t n_boxes_;
    double k_global_;
    bool degenerate_;
};

// Linear map over the window (mean - 3*sigma, mean + 3*sigma) with slope
// N/(6*sigma); indices outside [1, N] are clamped, so any finite key maps.
class StatisticalMapper {
public:
    StatisticalMapper(double mean, double sigma, std::size_t n_boxes);

    double mean() const noexcept { return mean_; }
    double sigma() const noexcept { return sigma_; }
    std::size_t n_boxes() const noexcept { return n_boxes_; }
    double k_global() const noexcept { return k_global_; }
    bool degenerate() const noexcept { return degenerate_; }
    // Left edge of box 1, mean - 3*sigma.
    double origin() const noexcept { return origin_; }

    std::size_t map(Key x) const {
        if (degenerate_) throw DegenerateMapper();
        const double f = std::floor((x - origin_) * k_global_);
        if (!(f >= 0.0)) return 1;
        if (f >= static_cast<double>(n_boxes_)) return n_boxes_;
        return static_cast<std::size_t>(f) + 1;
    }

private:
    double mean_;
    double sigma_;
    std::size_t n_boxes_;
    double k_global_;
    double origin_;
    bool degenerate_;
};

// Prefix sums of box occupancies: a(n) = number of records in boxes 1..n,
// with a(0) = 0. Non-decreasing; a(N) is the total record count.
class DistributionArray {
public:
    explicit DistributionArray(std::span<const std::uint64_t> occupancies);
    explicit DistributionArray(std::span<const std::uint32_t> occupancies);

    std::size_t n_boxes() const noexcept { return prefix_.size() - 1; }
    std::uint64_t total() const noexcept { return prefix_.back(); }

    // n may be 0..N; a(0) == 0 by convention.
    std::uint64_t a(std::size_t n) const { return prefix_.at(n); }

    std::uint64_t occupancy(std::size_t n) const {
        return prefix_.at(n) - prefix_.at(n - 1);
    }

private:
    std::vector<std::uint64_t> prefix_; // prefix_[0] = 0
};

namespace detail {

// One refined-placement step shared by map_g2 and the two-pass pipeline
// (the statistical pipeline passes origin = mean - 3*sigma). The raw slot
// A[n-1] + floor((x - x_low) * k_local) + 1 is clamped into the box's
// position window [A[n-1]+1, A[n]]; `clamp_count` is bumped when the
// clamp fires. Caller guarantees box `n` is non-empty.
inline std::uint64_t refined_position(double origin, double k_global,
                                      const DistributionArray& dist,
                                      std::size_t n, Key x,
                                      std::uint64_t& clamp_count) {
    const std::uint64_t below = dist.a(n - 1);
    const std::uint64_t lo = below + 1;
    const std::uint64_t hi = dist.a(n);
    const double occ = static_cast<double>(hi - below);
    const double k_local = k_global * (occ - 1.0);
    const double x_low = static_cast<double>(n - 1) / k_global + origin;
    const double f = std::floor((x - x_low) * k_local);
    if (f >= 0.0 && f < occ) return lo + static_cast<std::uint64_t>(f);
    ++clamp_count; // boundary rounding; any slot inside the box stays correct
    return f < 0.0 ? lo : hi;
}

} // namespace detail

// Function II: a two-terminals base plus the distribution array produced
// by its own scatter over the same records.
class RefinedMapper {
public:
    RefinedMapper(TwoTerminalMapper base, DistributionArray dist);

    const TwoTerminalMapper& base() const noexcept { return base_; }
    const DistributionArray& dist() const noexcept { return dist_; }

    // k_local(n) = k_global * (A[n] - A[n-1] - 1); requires box n non-empty.
    double local_tangent(std::size_t n) const;

    // g2(x): final position in [1, total], clamped into Lemma-1's window.
    std::uint64_t position(Key x) const {
        std::uint64_t ignored = 0;
        return position(x, ignored);
    }
    std::uint64_t position(Key x, std::uint64_t& clamp_count) const {
        if (base_.degenerate()) throw DegenerateMapper();
        const std::size_t n = base_.map(x);
        if (dist_.occupancy(n) == 0) throw EmptyBox(n);
        return detail::refined_position(base_.x_min(), base_.k_global(), dist_, n,
                                        x, clamp_count);
    }

private:
    TwoTerminalMapper base_;
    DistributionArray dist_;
};

// Spec-facing operation names. The builders scan once for extrema or
// twice for (mean, sigma); both reject empty input and non-finite keys.
TwoTerminalMapper build_two_terminal_mapper(std::span<const Key> records);
StatisticalMapper build_statistical_mapper(std::span<const Key> records);
DistributionArray build_distribution_array(std::span<const std::uint64_t> occupancies);

inline std::size_t map_g1(const TwoTerminalMapper& m, Key x) { return m.map(x); }
inline std::size_t map_stat(const StatisticalMapper& m, Key x) { return m.map(x); }
inline double local_tangent(const RefinedMapper& m, std::size_t n) {
    return m.local_tangent(n);
}
inline std::uint64_t map_g2(const RefinedMapper& m, Key x) { return m.position(x); }

} // namespace gfsort
