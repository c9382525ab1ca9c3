#include "coconvex/error.hpp"
#include "coconvex/inequalities.hpp"
#include "coconvex/polyfit.hpp"
#include "coconvex/semigroups.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coconvex;

namespace {

LatticeSemigroup orthant_semigroup(std::size_t n) { return LatticeSemigroup(orthant(n)); }

SemigroupIdealSet ideal(std::initializer_list<std::initializer_list<long>> gens) {
    std::vector<LatticePoint> g;
    for (auto p : gens) g.emplace_back(p);
    return SemigroupIdealSet(orthant_semigroup(g.front().dim()), g);
}

std::set<std::vector<long>> as_set(const SemigroupIdealSet& i) {
    std::set<std::vector<long>> out;
    for (const auto& g : i.min_generators()) {
        std::vector<long> v;
        for (const auto& x : g.coords) v.push_back(x.get_si());
        out.insert(v);
    }
    return out;
}

std::vector<std::vector<long>> as_vectors(const SemigroupIdealSet& i) {
    auto s = as_set(i);
    return {s.begin(), s.end()};
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Semigroup, DefaultFunctionalIsFacetSum) {
    EXPECT_EQ(orthant_semigroup(3).ell(), LinearFunctional::from_integers({1, 1, 1}));
}

TEST(Ideal, MinimalGeneratorsPruned) {
    auto i = ideal({{1, 0}, {2, 3}, {0, 1}, {1, 0}});
    EXPECT_EQ(i.min_generators().size(), 2U);
    EXPECT_TRUE(i.contains(LatticePoint{2, 3}));
    EXPECT_FALSE(i.contains(LatticePoint{0, 0}));
    EXPECT_EQ(kind_of([] { ideal({{-1, 0}}); }), ErrorKind::InvalidInput);
}

TEST(IdealPower, Examples) {
    EXPECT_EQ(as_set(ideal_power(ideal({{1, 0}, {0, 1}}), 2)), (std::set<std::vector<long>>{{2, 0}, {1, 1}, {0, 2}}));
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    EXPECT_EQ(ideal_power(i, 1), i);
    auto p = ideal_power(ideal({{2, 0}, {0, 2}}), 3);
    EXPECT_EQ(as_set(p), (std::set<std::vector<long>>{{6, 0}, {4, 2}, {2, 4}, {0, 6}}));
    EXPECT_EQ(as_set(p), oracle::orthant_power({{2, 0}, {0, 2}}, 3));
}

TEST(ComplementCount, Examples) {
    EXPECT_EQ(complement_count(ideal({{1, 0}, {0, 1}})), 1);
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    EXPECT_EQ(complement_count(i), 4);
    auto pts = complement_points(i);
    EXPECT_EQ(pts, (std::vector<LatticePoint>{LatticePoint{0, 0}, LatticePoint{0, 1}, LatticePoint{1, 0}, LatticePoint{2, 0}}));
    EXPECT_EQ(complement_count(ideal_power(ideal({{1, 0}, {0, 1}}), 2)), 3);
    EXPECT_EQ(complement_count(ideal({{0, 0}})), 0);
    EXPECT_EQ(kind_of([] { complement_count(ideal({{2, 0}, {1, 1}})); }), ErrorKind::NotPrimary);
}

TEST(ComplementCount, NonOrthantCone) {
    // Cone over (1,0),(1,2): no coordinate vector... (1,0) is a ray, so the
    // line counter applies; (0,1) is outside. Compare with point testing.
    auto cone = dual_description({LatticePoint{1, 0}, LatticePoint{1, 2}});
    LatticeSemigroup s(cone);
    SemigroupIdealSet i(s, {LatticePoint{3, 0}, LatticePoint{2, 4}, LatticePoint{2, 1}});
    EXPECT_EQ(complement_count(i), Integer(static_cast<long>(complement_points(i).size())));
    // A cone containing no coordinate vector at all.
    auto tilted = dual_description({LatticePoint{2, 1}, LatticePoint{1, 2}});
    LatticeSemigroup t(tilted);
    SemigroupIdealSet j(t, {LatticePoint{4, 2}, LatticePoint{2, 4}, LatticePoint{1, 1}});
    long brute = 0;
    for (long x = 0; x < 10; ++x)
        for (long y = 0; y < 10; ++y) {
            LatticePoint p{x, y};
            if (t.contains(p) && !j.contains(p)) ++brute;
        }
    EXPECT_EQ(complement_count(j), brute);
}

TEST(HilbertSamuel, Examples) {
    auto h = hilbert_samuel_sequence(PrimaryGradedSequence::powers(ideal({{1, 0}, {0, 1}})), 3);
    EXPECT_EQ(h, (std::vector<Integer>{1, 3, 6}));
    auto h3 = hilbert_samuel_sequence(PrimaryGradedSequence::powers(ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 2);
    EXPECT_EQ(h3[1], binomial(4, 3));
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    EXPECT_EQ(hilbert_samuel_sequence(PrimaryGradedSequence::powers(i), 1)[0], complement_count(i));
}

TEST(HilbertBasis, OrthantAndSkewCone) {
    EXPECT_EQ(hilbert_basis(orthant_semigroup(2)), (std::vector<LatticePoint>{LatticePoint{0, 1}, LatticePoint{1, 0}}));
    LatticeSemigroup s(dual_description({LatticePoint{1, 0}, LatticePoint{1, 2}}));
    auto hb = hilbert_basis(s);
    EXPECT_EQ(hb.size(), 3U);  // (1,0), (1,1), (1,2)
    EXPECT_NE(std::find(hb.begin(), hb.end(), LatticePoint{1, 1}), hb.end());
}

TEST(PrimaryCertificate, Examples) {
    EXPECT_EQ(primary_certificate(ideal({{1, 0}, {0, 1}})), 3);
    EXPECT_EQ(primary_certificate(ideal({{0, 0}})), 1);
    EXPECT_LE(primary_certificate(ideal({{2, 0}, {0, 2}})), 8);
    EXPECT_EQ(kind_of([] { primary_certificate(ideal({{2, 0}, {1, 1}})); }), ErrorKind::NotPrimary);
}

TEST(GammaRegion, Examples) {
    auto m = PrimaryGradedSequence::powers(ideal({{1, 0}, {0, 1}}));
    auto m2 = PrimaryGradedSequence::powers(ideal({{2, 0}, {0, 2}}));
    EXPECT_EQ(gamma_region(m), ideal_region(ideal({{1, 0}, {0, 1}})));
    EXPECT_EQ(covol(gamma_region(PrimaryGradedSequence::product(m, m2))), Rational(9, 2));
    EXPECT_TRUE(gamma_region(PrimaryGradedSequence::powers(ideal({{0, 0}}))).is_whole_cone());
}

TEST(Multiplicity, Examples) {
    auto m = PrimaryGradedSequence::powers(ideal({{1, 0}, {0, 1}}));
    auto m2 = PrimaryGradedSequence::powers(ideal({{2, 0}, {0, 2}}));
    EXPECT_EQ(multiplicity(m).value, Rational(1, 2));
    EXPECT_EQ(multiplicity(m2).value, 2);
    auto prod = PrimaryGradedSequence::product(m, m2);
    EXPECT_TRUE(multiplicity(prod).exact);
    EXPECT_EQ(multiplicity(prod).value, Rational(9, 2));
}

TEST(Multiplicity, PrefixIsBracketedNotExact) {
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    auto seq = PrimaryGradedSequence::prefix(ideal_powers(i, 4));
    auto m = multiplicity(seq);
    EXPECT_FALSE(m.exact);
    ASSERT_TRUE(m.trend.has_value());
    // For powers the scaled hulls all coincide with conv(I).
    EXPECT_EQ(m.value, Rational(5, 2));
    EXPECT_GT(*m.trend, m.value);
    EXPECT_EQ(kind_of([&] { seq.term(5); }), ErrorKind::InvalidInput);
}

TEST(Prefix, RejectsNonGradedTerms) {
    EXPECT_EQ(kind_of([] { PrimaryGradedSequence::prefix({ideal({{1, 0}, {0, 1}}), ideal({{3, 0}, {0, 3}})}); }),
              ErrorKind::InvalidInput);
}

TEST(MixedMultiplicity, Examples) {
    auto m = PrimaryGradedSequence::powers(ideal({{1, 0}, {0, 1}}));
    auto m2 = PrimaryGradedSequence::powers(ideal({{2, 0}, {0, 2}}));
    EXPECT_EQ(mixed_multiplicity_semigroup({m2, m2}), 2 * multiplicity(m2).value);
    EXPECT_EQ(mixed_multiplicity_semigroup({m, m2}), 2);
    auto m3 = PrimaryGradedSequence::powers(ideal({{3, 0}, {0, 3}}));
    EXPECT_EQ(mixed_multiplicity_semigroup({m, m3}), 3);
}

// ------------------------------------------------------------ properties

namespace {

std::vector<std::vector<long>> random_gens(std::mt19937_64& rng, std::size_t n, long bound, int extra) {
    std::uniform_int_distribution<long> d(0, bound);
    std::vector<std::vector<long>> g;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = d(rng) % bound + 1;
        g.push_back(e);
    }
    for (int k = 0; k < extra; ++k) {
        std::vector<long> v(n);
        for (auto& x : v) x = d(rng);
        g.push_back(v);
    }
    return g;
}

SemigroupIdealSet from_vectors(const std::vector<std::vector<long>>& g) {
    std::vector<LatticePoint> pts;
    for (const auto& v : g) {
        IntVector c;
        for (auto x : v) c.emplace_back(x);
        pts.emplace_back(c);
    }
    return SemigroupIdealSet(orthant_semigroup(g.front().size()), pts);
}

}  // namespace

TEST(Property, StaircaseMatchesBruteForceSums) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 2;
        auto g = random_gens(rng, n, 4, 2);
        auto i = from_vectors(g);
        for (unsigned k = 1; k <= 4; ++k) {
            auto p = ideal_power(i, k);
            EXPECT_EQ(as_set(p), oracle::orthant_power(g, static_cast<int>(k)));
            EXPECT_EQ(complement_count(p), oracle::orthant_colength(n, as_vectors(p)));
            EXPECT_EQ(complement_count(p), Integer(static_cast<long>(complement_points(p).size())));
        }
        for (const auto& x : oracle::points_below(n, 8)) {
            IntVector c;
            for (auto v : x) c.emplace_back(v);
            EXPECT_EQ(i.contains(LatticePoint(c)), oracle::dominates(x, as_vectors(i)));
        }
    }
}

TEST(Property, PrimaryEquationHoldsOnWindow) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 8; ++t) {
        const std::size_t n = 2 + t % 2;
        auto i = from_vectors(random_gens(rng, n, 3, 1));
        const Rational t0 = primary_certificate(i);
        const auto powers = ideal_powers(i, n == 2 ? 8 : 4);
        for (unsigned k = 1; k <= powers.size(); ++k) {
            const Rational level = t0 * k;
            // Every point of S at level ≥ k·t0 within a window lies in I_k.
            const long top = floor(level).get_si() + 6;
            for (const auto& x : oracle::points_below(n, top)) {
                long s = 0;
                for (auto v : x) s += v;
                if (Rational(s) < level) continue;
                IntVector c;
                for (auto v : x) c.emplace_back(v);
                EXPECT_TRUE(powers[k - 1].contains(LatticePoint(c))) << "k=" << k;
            }
        }
    }
}

TEST(Property, LeadingCoefficientIsCovolume) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 12; ++t) {
        const std::size_t n = 2 + t % 2;
        auto i = from_vectors(random_gens(rng, n, 4, 2));
        auto seq = PrimaryGradedSequence::powers(i);
        const unsigned cap = n == 2 ? 16 : 8;
        auto h = hilbert_samuel_sequence(seq, cap + static_cast<unsigned>(n) + 2);
        auto fit = fit_eventually_polynomial([&](unsigned k) { return h[k - 1]; }, static_cast<unsigned>(n), 1, cap);
        EXPECT_EQ(fit.leading(), multiplicity(seq).value);
    }
}

TEST(Property, ProductRegionIsMinkowskiSum) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = 2 + t % 2;
        auto a = from_vectors(random_gens(rng, n, 4, 2));
        auto b = from_vectors(random_gens(rng, n, 4, 2));
        auto prod = PrimaryGradedSequence::product(PrimaryGradedSequence::powers(a), PrimaryGradedSequence::powers(b));
        EXPECT_EQ(gamma_region(prod), ideal_region(ideal_sum(a, b)));
        EXPECT_EQ(gamma_region(prod), minkowski_sum(ideal_region(a), ideal_region(b)));
    }
}

TEST(Property, SemigroupBrunnMinkowskiAndAlexandrovFenchel) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 12; ++t) {
        const std::size_t n = 2 + t % 2;
        auto a = PrimaryGradedSequence::powers(from_vectors(random_gens(rng, n, 4, 2)));
        auto b = PrimaryGradedSequence::powers(from_vectors(random_gens(rng, n, 4, 2)));
        const unsigned dim = static_cast<unsigned>(n);
        EXPECT_GE(compare_root_sum(multiplicity(a).value, multiplicity(b).value,
                                   multiplicity(PrimaryGradedSequence::product(a, b)).value, dim),
                  0);
        if (n == 2) {
            EXPECT_GE(compare_product_square(mixed_multiplicity_semigroup({a, a}), mixed_multiplicity_semigroup({b, b}),
                                             mixed_multiplicity_semigroup({a, b})),
                      0);
        }
    }
}
