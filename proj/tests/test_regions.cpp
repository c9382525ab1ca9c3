#include "coconvex/error.hpp"
#include "coconvex/inequalities.hpp"
#include "coconvex/polyfit.hpp"
#include "coconvex/regions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coconvex;

namespace {

const LinearFunctional ones2 = LinearFunctional::from_integers({1, 1});
const LinearFunctional ones3 = LinearFunctional::from_integers({1, 1, 1});

NewtonRegion region2(std::initializer_list<std::initializer_list<long>> gens) {
    std::vector<LatticePoint> g;
    for (auto p : gens) g.emplace_back(p);
    return newton_region(orthant(2), g, ones2);
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

TEST(NewtonRegion, WholeCone) {
    auto r = region2({{0, 0}});
    EXPECT_TRUE(r.is_whole_cone());
    EXPECT_EQ(covol(r), 0);
    EXPECT_EQ(cobounded_threshold(r), 0);
}

TEST(NewtonRegion, SimplexFacets) {
    auto r = region2({{1, 0}, {0, 1}});
    std::vector<Halfspace> expect{{{0, 1}, 0}, {{1, 0}, 0}, {{1, 1}, 1}};
    EXPECT_EQ(r.facets(), expect);
}

TEST(NewtonRegion, NotCobounded) {
    EXPECT_EQ(kind_of([] { region2({{2, 0}}); }), ErrorKind::NotCobounded);
}

TEST(NewtonRegion, RejectsBadFunctionalAndGenerators) {
    EXPECT_EQ(kind_of([] { newton_region(orthant(2), std::vector<LatticePoint>{LatticePoint{1, 0}, LatticePoint{0, 1}}, LinearFunctional::from_integers({1, 0})); }),
              ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { region2({{-1, 2}}); }), ErrorKind::InvalidInput);
}

TEST(Threshold, Examples) {
    EXPECT_EQ(cobounded_threshold(region2({{1, 0}, {0, 1}})), 1);
    auto r = region2({{3, 0}, {1, 1}, {0, 2}});
    EXPECT_LE(r.threshold(), 6);
    // The certificate: every point of C on the level T lies in Γ.
    for (long x = 0; x <= 6; ++x) {
        const Rational t = r.threshold();
        EXPECT_TRUE(r.contains(RationalPoint(RatVector{Rational(x, 6) * t, (1 - Rational(x, 6)) * t})));
    }
}

TEST(Covol, Examples) {
    EXPECT_EQ(covol(region2({{1, 0}, {0, 1}})), Rational(1, 2));
    EXPECT_EQ(covol(region2({{3, 0}, {1, 1}, {0, 2}})), oracle::orthant_covol2({{3, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(oracle::orthant_covol2({{3, 0}, {1, 1}, {0, 2}}), Rational(5, 2));
    auto r3 = newton_region(orthant(3), std::vector<LatticePoint>{LatticePoint{1, 0, 0}, LatticePoint{0, 1, 0}, LatticePoint{0, 0, 1}}, ones3);
    EXPECT_EQ(covol(r3), Rational(1, 6));
}

TEST(Covol, LatticeCountLimit) {
    // #{x ∈ N² : x + y < k} = k(k+1)/2, so the count over k² tends to 1/2.
    for (long k : {10L, 100L}) {
        const Rational h(k * (k + 1) / 2);
        EXPECT_EQ(h / (k * k) - Rational(1, 2), Rational(1, 2 * k));
    }
}

TEST(Covol, SkewCone) {
    auto cone = dual_description({LatticePoint{1, 0}, LatticePoint{1, 2}});
    auto r = newton_region(cone, std::vector<LatticePoint>{LatticePoint{2, 0}, LatticePoint{2, 4}, LatticePoint{1, 1}}, ones2);
    // C \ Γ lies in {x ≤ 2}, where C is the triangle (0,0),(2,0),(2,4) and Γ
    // is the triangle (2,0),(1,1),(2,4).
    std::vector<oracle::P2> outer{{0, 0}, {2, 0}, {2, 4}};
    std::vector<oracle::P2> inner{{2, 0}, {1, 1}, {2, 4}};
    EXPECT_EQ(covol(r), oracle::area2(outer) - oracle::area2(inner));
}

TEST(Minkowski, IdentityAndSum) {
    auto a = region2({{1, 0}, {0, 1}});
    EXPECT_EQ(minkowski_sum(a, region2({{0, 0}})), a);
    auto s = minkowski_sum(a, region2({{2, 0}, {0, 2}}));
    EXPECT_EQ(covol(s), Rational(9, 2));
    EXPECT_EQ(oracle::orthant_covol2({{3, 0}, {1, 2}, {2, 1}, {0, 3}}), Rational(9, 2));
    for (const auto& g : s.generators()) EXPECT_EQ(g[0] + g[1], 3);
    EXPECT_EQ(scale(a, 3), s);
}

TEST(Minkowski, ConeMismatch) {
    auto a = region2({{1, 0}, {0, 1}});
    auto b = newton_region(orthant(2), std::vector<LatticePoint>{LatticePoint{1, 0}, LatticePoint{0, 1}}, LinearFunctional::from_integers({1, 2}));
    EXPECT_EQ(kind_of([&] { minkowski_sum(a, b); }), ErrorKind::ConeMismatch);
}

TEST(Scale, Examples) {
    auto a = region2({{1, 0}, {0, 1}});
    EXPECT_EQ(scale(a, 1), a);
    EXPECT_EQ(covol(scale(a, 2)), 2);
    EXPECT_EQ(covol(scale(region2({{2, 0}, {0, 2}}), Rational(1, 2))), Rational(1, 2));
    EXPECT_EQ(kind_of([&] { scale(a, 0); }), ErrorKind::NonpositiveScalar);
    EXPECT_EQ(kind_of([&] { scale(a, -1); }), ErrorKind::NonpositiveScalar);
}

TEST(NewtonDiagram, Examples) {
    auto d1 = newton_diagram(region2({{1, 0}, {0, 1}}));
    ASSERT_EQ(d1.size(), 1U);
    EXPECT_EQ(d1[0].vertices, (std::vector<RationalPoint>{RationalPoint(LatticePoint{0, 1}), RationalPoint(LatticePoint{1, 0})}));
    EXPECT_TRUE(newton_diagram(region2({{0, 0}})).empty());
    auto d3 = newton_diagram(region2({{3, 0}, {1, 1}, {0, 2}}));
    ASSERT_EQ(d3.size(), 2U);
    EXPECT_EQ(d3[0].vertices, (std::vector<RationalPoint>{RationalPoint(LatticePoint{0, 2}), RationalPoint(LatticePoint{1, 1})}));
    EXPECT_EQ(d3[1].vertices, (std::vector<RationalPoint>{RationalPoint(LatticePoint{1, 1}), RationalPoint(LatticePoint{3, 0})}));
}

TEST(MixedCovol, Examples) {
    auto a = region2({{1, 0}, {0, 1}});
    auto b = region2({{2, 0}, {0, 2}});
    EXPECT_EQ(mixed_covol({b, b}), 2);
    EXPECT_EQ(mixed_covol({a, b}), (Rational(9, 2) - Rational(1, 2) - 2) / 2);
    EXPECT_EQ(mixed_covol({a, b}), 1);
    EXPECT_EQ(mixed_covol({scale(a, 2), b}), 2);
    EXPECT_EQ(kind_of([&] { mixed_covol({a}); }), ErrorKind::WrongArity);
    EXPECT_EQ(kind_of([&] { mixed_covol({a, a, a}); }), ErrorKind::WrongArity);
}

TEST(CoconvexBody, CachedCovolume) {
    CoconvexBody body(region2({{3, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(body.covolume(), covol(body.region()));
}

TEST(RootSum, ExactCases) {
    // √(1/2) + √2 = √(9/2).
    EXPECT_EQ(compare_root_sum(Rational(1, 2), 2, Rational(9, 2), 2), 0);
    EXPECT_EQ(compare_root_sum(1, 4, 9, 2), 0);
    EXPECT_EQ(compare_root_sum(1, 4, 8, 2), 1);
    EXPECT_EQ(compare_root_sum(1, 4, 10, 2), -1);
    EXPECT_EQ(compare_root_sum(0, 3, 3, 3), 0);
    EXPECT_EQ(compare_root_sum(2, 3, 10, 2), -1);  // 1.414 + 1.732 < 3.162
    EXPECT_EQ(compare_root_sum(2, 3, Rational(989, 100), 2), 1);  // (√2+√3)² ≈ 9.8990
    EXPECT_EQ(compare_root_sum(2, 3, Rational(99, 10), 2), -1);
    EXPECT_EQ(compare_root_sum(1, 2, Rational(5828, 1000), 2), 1);  // (1+√2)² ≈ 5.8284
    EXPECT_EQ(compare_root_sum(1, 2, Rational(58285, 10000), 2), -1);
    EXPECT_EQ(compare_root_sum(1, 2, 10, 3), 1);  // (1+2^{1/3})³ ≈ 10.30
}

TEST(PolyFit, HomogeneousGrid) {
    auto f = [](unsigned x, unsigned y) { return Rational(x * x + 4 * x * y + 4 * y * y); };
    auto fit = fit_homogeneous_grid(f, 2, 3);
    EXPECT_TRUE(fit.exact);
    EXPECT_EQ(fit.coeffs, (std::vector<Rational>{1, 4, 4}));
    auto g = [](unsigned x, unsigned y) { return Rational(x * x + y + 1); };
    EXPECT_FALSE(fit_homogeneous_grid(g, 2, 3).exact);
}

TEST(PolyFit, Stabilization) {
    // h(k) = k(k+1)/2 except for a perturbation at k ≤ 3.
    auto h = [](unsigned k) { return Integer(k * (k + 1) / 2 + (k <= 3 ? 1 : 0)); };
    auto fit = fit_eventually_polynomial(h, 2, 1, 10);
    EXPECT_EQ(fit.start, 4U);
    EXPECT_EQ(fit.leading(), Rational(1, 2));
    auto wild = [](unsigned k) { return Integer(1) << k; };
    EXPECT_EQ(kind_of([&] { fit_eventually_polynomial(wild, 2, 1, 5); }), ErrorKind::FitNotStabilized);
}

// ------------------------------------------------------------ properties

namespace {

std::vector<std::pair<long, long>> random_staircase2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(0, 6);
    std::vector<std::pair<long, long>> g{{d(rng) + 1, 0}, {0, d(rng) + 1}};
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) g.emplace_back(d(rng), d(rng));
    return g;
}

NewtonRegion from_pairs(const std::vector<std::pair<long, long>>& g) {
    std::vector<LatticePoint> pts;
    for (auto [x, y] : g) pts.push_back(LatticePoint{x, y});
    return newton_region(orthant(2), pts, ones2);
}

NewtonRegion random_region3(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(0, 4);
    std::vector<LatticePoint> g{LatticePoint{d(rng) + 1, 0, 0}, LatticePoint{0, d(rng) + 1, 0}, LatticePoint{0, 0, d(rng) + 1}};
    const int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) g.push_back(LatticePoint{d(rng), d(rng), d(rng)});
    return newton_region(orthant(3), g, ones3);
}

}  // namespace

TEST(Property, PlanarCovolMatchesOracle) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        auto g = random_staircase2(rng);
        EXPECT_EQ(covol(from_pairs(g)), oracle::orthant_covol2(g));
    }
}

TEST(Property, ThresholdIndependence) {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 200; ++i) {
        auto r = i % 4 == 3 ? random_region3(rng) : from_pairs(random_staircase2(rng));
        EXPECT_EQ(covol(r), covol_at(r, 2 * r.threshold() + 1));
        if (!r.is_whole_cone()) { EXPECT_EQ(covol(r), covol_at(r, 2 * r.threshold())); }
    }
}

TEST(Property, PolynomialityOfCovolume) {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 10; ++i) {
        const bool three = i % 2 == 1;
        auto a = three ? random_region3(rng) : from_pairs(random_staircase2(rng));
        auto b = three ? random_region3(rng) : from_pairs(random_staircase2(rng));
        auto f = [&](unsigned x, unsigned y) {
            if (x == 0 && y == 0) return Rational(0);
            if (x == 0) return covol(scale(b, y));
            if (y == 0) return covol(scale(a, x));
            return covol(minkowski_sum(scale(a, x), scale(b, y)));
        };
        auto fit = fit_homogeneous_grid(f, static_cast<unsigned>(a.dim()), 3);
        EXPECT_TRUE(fit.exact);
        // Coefficients are binomial multiples of mixed covolumes.
        EXPECT_EQ(fit.coeffs.front(), covol(a));
        EXPECT_EQ(fit.coeffs.back(), covol(b));
    }
}

TEST(Property, MixedCovolSymmetryMultilinearityDiagonal) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 6; ++i) {
        auto a = random_region3(rng), b = random_region3(rng), c = random_region3(rng);
        const Rational abc = mixed_covol({a, b, c});
        EXPECT_EQ(abc, mixed_covol({c, a, b}));
        EXPECT_EQ(abc, mixed_covol({b, a, c}));
        EXPECT_EQ(mixed_covol({a, a, a}), covol(a));
        EXPECT_EQ(mixed_covol({scale(a, 2), b, c}), 2 * abc);
        EXPECT_EQ(mixed_covol({minkowski_sum(a, b), b, c}), abc + mixed_covol({b, b, c}));
    }
}

TEST(Property, AlexandrovFenchelAndBrunnMinkowski) {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 40; ++i) {
        auto a = from_pairs(random_staircase2(rng));
        auto b = from_pairs(random_staircase2(rng));
        EXPECT_GE(compare_product_square(mixed_covol({a, a}), mixed_covol({b, b}), mixed_covol({a, b})), 0);
        EXPECT_GE(compare_root_sum(covol(a), covol(b), covol(minkowski_sum(a, b)), 2), 0);
        EXPECT_EQ(compare_root_sum(covol(a), covol(scale(a, 3)), covol(minkowski_sum(a, scale(a, 3))), 2), 0);
    }
    for (int i = 0; i < 5; ++i) {
        auto a = random_region3(rng), b = random_region3(rng), c = random_region3(rng);
        EXPECT_GE(compare_product_square(mixed_covol({a, a, c}), mixed_covol({b, b, c}), mixed_covol({a, b, c})), 0);
        EXPECT_GE(compare_root_sum(covol(a), covol(b), covol(minkowski_sum(a, b)), 3), 0);
    }
}
