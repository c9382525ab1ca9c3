#include "coconvex/random.hpp"

#include "coconvex/error.hpp"

namespace coconvex {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
    state_ = splitmix64(seed);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ULL;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::InvalidInput, "empty random range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw Error(ErrorKind::InvalidInput, "empty random range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed + index * 0x9E3779B97F4A7C15ULL;
    return splitmix64(s);
}

namespace {

void check_spec(const InstanceSpec& spec) {
    if (spec.dim == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
    if (spec.exponent_bound < 1) throw Error(ErrorKind::InvalidInput, "exponent bound must be at least 1");
    if (spec.min_generators > spec.max_generators) throw Error(ErrorKind::InvalidInput, "empty generator range");
}

}  // namespace

RationalCone spec_cone(const InstanceSpec& spec) {
    return spec.rays ? dual_description(*spec.rays) : orthant(spec.dim);
}

MonomialIdealLocal random_monomial_ideal(const InstanceSpec& spec) {
    check_spec(spec);
    const std::size_t n = spec.dim;
    Rng rng(spec.seed);
    const long total = rng.uniform(spec.min_generators, spec.max_generators);
    std::vector<LatticePoint> gens;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = rng.uniform(1, spec.exponent_bound);
        gens.emplace_back(std::move(e));
    }
    for (long j = static_cast<long>(n); j < total; ++j) {
        IntVector e(n);
        for (auto& c : e) c = rng.uniform(0, spec.exponent_bound - 1);
        LatticePoint p(std::move(e));
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return MonomialIdealLocal(gens, TermOrder::standard(n));
}

SemigroupIdealSet random_semigroup_ideal(const InstanceSpec& spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    const LatticeSemigroup s(spec_cone(spec));
    const auto hb = hilbert_basis(s);
    const long total = rng.uniform(spec.min_generators, spec.max_generators);
    std::vector<LatticePoint> gens;
    for (const auto& r : s.cone().rays()) gens.push_back(Integer(rng.uniform(1, spec.exponent_bound)) * r);
    for (long j = static_cast<long>(gens.size()); j < total; ++j) {
        LatticePoint p(IntVector(spec.dim, 0));
        for (const auto& h : hb) p = p + Integer(rng.uniform(0, spec.exponent_bound - 1)) * h;
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return SemigroupIdealSet(s, gens);
}

}  // namespace coconvex
