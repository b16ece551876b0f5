#include "gfsort/mapping.hpp"

#include <cmath>

namespace gfsort {

namespace detail {

Extrema scan_extrema(std::span<const Key> records) {
    if (records.empty()) throw EmptyInput();
    Key mn = records[0];
    Key mx = records[0];
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Key x = records[i];
        if (!std::isfinite(x)) throw NonFiniteKey(i);
        if (x < mn) mn = x;
        if (x > mx) mx = x;
    }
    return {mn, mx};
}

} // namespace detail

TwoTerminalMapper::TwoTerminalMapper(Key x_min, Key x_max, std::size_t n_boxes)
    : x_min_(x_min), x_max_(x_max), n_boxes_(n_boxes) {
    if (n_boxes == 0) throw InvalidSpec("n_boxes", "must be at least 1");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw NonFiniteKey(0, "terminal");
    if (x_max < x_min) throw InvalidSpec("x_max", "must not be below x_min");
    k_global_ = static_cast<double>(n_boxes - 1) / (x_max - x_min);
    // Single box, equal terminals, or an overflowing range all leave no
    // usable slope; everything then belongs in box 1 and map() refuses.
    degenerate_ = n_boxes == 1 || x_min == x_max || !std::isfinite(k_global_) ||
                  k_global_ <= 0.0;
}

StatisticalMapper::StatisticalMapper(double mean, double sigma, std::size_t n_boxes)
    : mean_(mean), sigma_(sigma), n_boxes_(n_boxes) {
    if (n_boxes == 0) throw InvalidSpec("n_boxes", "must be at least 1");
    if (std::isnan(sigma) || sigma < 0.0)
        throw InvalidSpec("sigma", "must be non-negative");
    // Moments that overflowed to infinity on wild-but-finite data leave
    // no usable window; that is a degenerate mapper, not a caller error.
    k_global_ = static_cast<double>(n_boxes) / (6.0 * sigma);
    origin_ = mean - 3.0 * sigma;
    degenerate_ = n_boxes == 1 || sigma == 0.0 || !std::isfinite(k_global_) ||
                  !std::isfinite(origin_) || k_global_ <= 0.0;
}

namespace {

template <typename T>
std::vector<std::uint64_t> prefix_sums(std::span<const T> occupancies) {
    std::vector<std::uint64_t> prefix(occupancies.size() + 1, 0);
    for (std::size_t i = 0; i < occupancies.size(); ++i)
        prefix[i + 1] = prefix[i] + static_cast<std::uint64_t>(occupancies[i]);
    return prefix;
}

} // namespace

DistributionArray::DistributionArray(std::span<const std::uint64_t> occupancies)
    : prefix_(prefix_sums(occupancies)) {
    if (occupancies.empty()) throw InvalidSpec("occupancies", "must not be empty");
}

DistributionArray::DistributionArray(std::span<const std::uint32_t> occupancies)
    : prefix_(prefix_sums(occupancies)) {
    if (occupancies.empty()) throw InvalidSpec("occupancies", "must not be empty");
}

RefinedMapper::RefinedMapper(TwoTerminalMapper base, DistributionArray dist)
    : base_(std::move(base)), dist_(std::move(dist)) {
    if (dist_.n_boxes() != base_.n_boxes())
        throw InvalidSpec("dist", "box count must match the base mapper");
}

double RefinedMapper::local_tangent(std::size_t n) const {
    if (base_.degenerate()) throw DegenerateMapper();
    if (n == 0 || n > dist_.n_boxes())
        throw InvalidSpec("n", "box index out of range");
    const std::uint64_t occ = dist_.occupancy(n);
    if (occ == 0) throw EmptyBox(n);
    return base_.k_global() * (static_cast<double>(occ) - 1.0);
}

TwoTerminalMapper build_two_terminal_mapper(std::span<const Key> records) {
    const auto [mn, mx] = detail::scan_extrema(records);
    return TwoTerminalMapper(mn, mx, records.size());
}

StatisticalMapper build_statistical_mapper(std::span<const Key> records) {
    if (records.empty()) throw EmptyInput();
    const std::size_t n = records.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(records[i])) throw NonFiniteKey(i);
        sum += records[i];
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const Key x : records) {
        const double d = x - mean;
        ss += d * d;
    }
    double sigma = std::sqrt(ss / static_cast<double>(n));
    // A mean that overflowed poisons the moments; report an unusable
    // (degenerate) window rather than a bogus parameter error.
    if (std::isnan(sigma)) sigma = std::numeric_limits<double>::infinity();
    return StatisticalMapper(mean, sigma, n);
}

DistributionArray build_distribution_array(std::span<const std::uint64_t> occupancies) {
    return DistributionArray(occupancies);
}

} // namespace gfsort
