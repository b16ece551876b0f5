#include "gfsort/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfsort/record_io.hpp"

namespace gfsort {

double Xoshiro256PlusPlus::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

DistKind dist_kind_from_name(const std::string& name) {
    if (name == "uniform") return DistKind::uniform;
    if (name == "gaussian") return DistKind::gaussian;
    if (name == "clustered") return DistKind::clustered;
    if (name == "constant") return DistKind::constant;
    if (name == "sorted-ascending") return DistKind::sorted_ascending;
    if (name == "reverse-sorted") return DistKind::reverse_sorted;
    throw InvalidSpec("kind", "unknown distribution '" + name + "'");
}

const char* dist_kind_name(DistKind kind) {
    switch (kind) {
        case DistKind::uniform: return "uniform";
        case DistKind::gaussian: return "gaussian";
        case DistKind::clustered: return "clustered";
        case DistKind::constant: return "constant";
        case DistKind::sorted_ascending: return "sorted-ascending";
        case DistKind::reverse_sorted: return "reverse-sorted";
    }
    throw InvalidSpec("kind", "unknown distribution kind");
}

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) throw InvalidSpec(field, "must be finite");
}

} // namespace

void validate(const DistributionSpec& spec) {
    switch (spec.kind) {
        case DistKind::uniform:
        case DistKind::sorted_ascending:
        case DistKind::reverse_sorted:
            require_finite(spec.lo, "lo");
            require_finite(spec.hi, "hi");
            if (!(spec.lo < spec.hi))
                throw InvalidSpec("hi", "must exceed lo");
            require_finite(spec.hi - spec.lo, "hi");
            break;
        case DistKind::gaussian:
            require_finite(spec.mean, "mean");
            require_finite(spec.sigma, "sigma");
            if (!(spec.sigma > 0.0))
                throw InvalidSpec("sigma", "must be positive");
            break;
        case DistKind::constant:
            require_finite(spec.value, "value");
            break;
        case DistKind::clustered: {
            if (spec.centers.empty())
                throw InvalidSpec("centers", "need at least one cluster center");
            for (const double c : spec.centers) require_finite(c, "centers");
            require_finite(spec.spread, "spread");
            if (spec.spread < 0.0)
                throw InvalidSpec("spread", "must be non-negative");
            if (!spec.weights.empty()) {
                if (spec.weights.size() != spec.centers.size())
                    throw InvalidSpec("weights", "must match the number of centers");
                double sum = 0.0;
                for (const double w : spec.weights) {
                    require_finite(w, "weights");
                    if (w < 0.0) throw InvalidSpec("weights", "must be non-negative");
                    sum += w;
                }
                if (std::abs(sum - 1.0) > 1e-6)
                    throw InvalidSpec("weights", "must sum to 1");
            }
            break;
        }
    }
}

namespace {

std::vector<Key> generate_uniform(std::size_t n, std::uint64_t seed, double lo,
                                  double hi) {
    Xoshiro256PlusPlus rng(seed);
    std::vector<Key> keys(n);
    for (auto& x : keys) {
        double v = lo + (hi - lo) * rng.next_double();
        if (v >= hi) v = std::nextafter(hi, lo); // keep the half-open promise
        x = v;
    }
    return keys;
}

} // namespace

std::vector<Key> generate(const DistributionSpec& spec) {
    validate(spec);
    const std::size_t n = spec.n;
    switch (spec.kind) {
        case DistKind::uniform:
            return generate_uniform(n, spec.seed, spec.lo, spec.hi);
        case DistKind::sorted_ascending: {
            auto keys = generate_uniform(n, spec.seed, spec.lo, spec.hi);
            std::sort(keys.begin(), keys.end());
            return keys;
        }
        case DistKind::reverse_sorted: {
            auto keys = generate_uniform(n, spec.seed, spec.lo, spec.hi);
            std::sort(keys.begin(), keys.end(), std::greater<>());
            return keys;
        }
        case DistKind::gaussian: {
            Xoshiro256PlusPlus rng(spec.seed);
            std::vector<Key> keys(n);
            for (auto& x : keys) x = spec.mean + spec.sigma * rng.next_gaussian();
            return keys;
        }
        case DistKind::constant:
            return std::vector<Key>(n, spec.value);
        case DistKind::clustered: {
            Xoshiro256PlusPlus rng(spec.seed);
            const std::size_t k = spec.centers.size();
            std::vector<double> cumulative(k);
            double run = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                run += spec.weights.empty() ? 1.0 / static_cast<double>(k)
                                            : spec.weights[i];
                cumulative[i] = run;
            }
            cumulative.back() = 1.0; // absorb rounding so a draw always lands
            std::vector<Key> keys(n);
            for (auto& x : keys) {
                const double u = rng.next_double();
                const auto it =
                    std::upper_bound(cumulative.begin(), cumulative.end(), u);
                const std::size_t c = static_cast<std::size_t>(
                    std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                             static_cast<std::ptrdiff_t>(k - 1)));
                x = spec.centers[c] + spec.spread * rng.next_gaussian();
            }
            return keys;
        }
    }
    throw InvalidSpec("kind", "unknown distribution kind");
}

std::string describe(const DistributionSpec& spec) {
    std::ostringstream out;
    out << dist_kind_name(spec.kind) << " n=" << spec.n << " seed=" << spec.seed;
    switch (spec.kind) {
        case DistKind::uniform:
        case DistKind::sorted_ascending:
        case DistKind::reverse_sorted:
            out << " lo=" << render_key(spec.lo) << " hi=" << render_key(spec.hi);
            break;
        case DistKind::gaussian:
            out << " mean=" << render_key(spec.mean)
                << " sigma=" << render_key(spec.sigma);
            break;
        case DistKind::constant:
            out << " value=" << render_key(spec.value);
            break;
        case DistKind::clustered: {
            out << " centers=";
            for (std::size_t i = 0; i < spec.centers.size(); ++i)
                out << (i ? "," : "") << render_key(spec.centers[i]);
            if (!spec.weights.empty()) {
                out << " weights=";
                for (std::size_t i = 0; i < spec.weights.size(); ++i)
                    out << (i ? "," : "") << render_key(spec.weights[i]);
            }
            out << " spread=" << render_key(spec.spread);
            break;
        }
    }
    out << " prng=xoshiro256++ (splitmix64-seeded)";
    return out.str();
}

} // namespace gfsort
