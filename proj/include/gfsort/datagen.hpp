#pragma once

// Seeded, bit-reproducible record generation for the benchmark inputs
// and stress distributions. The generator stack is pinned — splitmix64
// expands the user seed into xoshiro256++ state, uniform doubles come
// from the top 53 bits, gaussians from the Marsaglia polar transform —
// so a (kind, params, seed) triple always reproduces the same keys.

#include <cstdint>
#include <string>
#include <vector>

#include "gfsort/error.hpp"
#include "gfsort/mapping.hpp"

namespace gfsort {

// Seed expander / mixer (Steele, Lea & Flood's splitmix64).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Blackman & Vigna's xoshiro256++ with splitmix64 state expansion.
class Xoshiro256PlusPlus {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next(); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via the polar method; the spare deviate is cached.
    double next_gaussian();

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Stable per-(stream, index) seed derivation so every trial of every
// scale sees its own reproducible data.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t index) {
    SplitMix64 sm(base ^ (stream * 0x9e3779b97f4a7c15ULL) ^
                  (index * 0xbf58476d1ce4e5b9ULL));
    return sm.next();
}

enum class DistKind {
    uniform,
    gaussian,
    clustered,
    constant,
    sorted_ascending,
    reverse_sorted,
};

// CLI-facing names: uniform, gaussian, clustered, constant,
// sorted-ascending, reverse-sorted. Unknown names throw InvalidSpec.
DistKind dist_kind_from_name(const std::string& name);
const char* dist_kind_name(DistKind kind);

struct DistributionSpec {
    DistKind kind = DistKind::uniform;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    // uniform / sorted-ascending / reverse-sorted
    double lo = -2.0e7;
    double hi = 2.0e7;
    // gaussian
    double mean = 0.0;
    double sigma = 1.0;
    // constant
    double value = 0.0;
    // clustered: gaussian bumps of width `spread` at `centers`, picked
    // with probabilities `weights` (empty = equal; must sum to 1).
    std::vector<double> centers;
    std::vector<double> weights;
    double spread = 1.0;
};

// Throws InvalidSpec naming the offending field.
void validate(const DistributionSpec& spec);

// Exactly spec.n finite keys, identical for identical specs.
std::vector<Key> generate(const DistributionSpec& spec);

// One-line provenance: kind, parameters, seed, generator name.
std::string describe(const DistributionSpec& spec);

} // namespace gfsort
