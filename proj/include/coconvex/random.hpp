#pragma once

// Deterministic instance generation. The generator is xorshift64* seeded
// through splitmix64, so other implementations can reproduce every instance.

#include "coconvex/localalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coconvex {

std::uint64_t splitmix64(std::uint64_t& state);

/// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x·2685821657736338717.
class Rng {
public:
    /// The state is the first splitmix64 output for the seed (never zero).
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform on [0, bound) by rejection of the lowest 2^64 mod bound outputs.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [lo, hi].
    long uniform(long lo, long hi);

private:
    std::uint64_t state_;
};

/// Seed for instance i of a run: splitmix64 applied to seed + i·0x9E3779B97F4A7C15.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

struct InstanceSpec {
    std::size_t dim = 2;
    /// Extreme rays of a custom cone; the orthant when absent.
    std::optional<std::vector<LatticePoint>> rays;
    unsigned min_generators = 3;
    unsigned max_generators = 6;
    long exponent_bound = 8;
    std::uint64_t seed = 0;
};

/// Pure powers x_i^{p_i}, 1 ≤ p_i ≤ bound, plus random exponents in [0, bound)ⁿ
/// up to a total drawn from the generator range; then pruned.
MonomialIdealLocal random_monomial_ideal(const InstanceSpec& spec);

/// On the instance cone: a multiple m·r, 1 ≤ m ≤ bound, of each extreme ray plus
/// random combinations of Hilbert basis elements with coefficients in [0, bound).
SemigroupIdealSet random_semigroup_ideal(const InstanceSpec& spec);

RationalCone spec_cone(const InstanceSpec& spec);

}  // namespace coconvex
