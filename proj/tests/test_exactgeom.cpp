#include "coconvex/exactgeom.hpp"
#include "coconvex/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coconvex;

namespace {

std::vector<RationalPoint> rpoints(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<RationalPoint> out;
    for (auto p : pts) out.emplace_back(LatticePoint(p));
    return out;
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

TEST(Arith, RationalTextRoundTrip) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational(" -7 ")), "-7");
    EXPECT_EQ(kind_of([] { parse_rational("1/0"); }), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { parse_rational("x"); }), ErrorKind::InvalidInput);
}

TEST(Arith, ExactRoot) {
    EXPECT_EQ(*exact_root(Rational(9, 4), 2), Rational(3, 2));
    EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
    EXPECT_EQ(*exact_root(Rational(8, 27), 3), Rational(2, 3));
}

TEST(DualDescription, OrthantIsSelfDual) {
    auto c = dual_description({LatticePoint{1, 0}, LatticePoint{0, 1}});
    std::vector<IntVector> expect{{0, 1}, {1, 0}};
    EXPECT_EQ(c.facets(), expect);
}

TEST(DualDescription, SkewCone) {
    auto c = dual_description({LatticePoint{1, 0}, LatticePoint{1, 2}});
    // Each facet normal is the rotation of one ray, oriented toward the other.
    std::vector<IntVector> expect{{0, 1}, {2, -1}};
    EXPECT_EQ(c.facets(), expect);
}

TEST(DualDescription, LineIsRejected) {
    EXPECT_EQ(kind_of([] { dual_description({LatticePoint{1, 0}, LatticePoint{-1, 0}}); }), ErrorKind::NotStronglyConvex);
}

TEST(DualDescription, ProperSubspaceIsRejected) {
    EXPECT_EQ(kind_of([] { dual_description({LatticePoint{1, 1}, LatticePoint{2, 2}}); }), ErrorKind::NotFullDimensional);
}

TEST(DualDescription, RedundantRaysArePruned) {
    auto c = dual_description({LatticePoint{1, 0, 0}, LatticePoint{0, 1, 0}, LatticePoint{0, 0, 1}, LatticePoint{2, 2, 1}});
    EXPECT_EQ(c.rays().size(), 3U);
    EXPECT_EQ(c.facets().size(), 3U);
}

TEST(PositiveOnCone, Examples) {
    auto o = orthant(2);
    EXPECT_TRUE(is_positive_on_cone(LinearFunctional::from_integers({1, 1}), o));
    EXPECT_FALSE(is_positive_on_cone(LinearFunctional::from_integers({1, 0}), o));
    auto c = dual_description({LatticePoint{1, 0}, LatticePoint{1, 2}});
    EXPECT_TRUE(is_positive_on_cone(LinearFunctional::from_integers({1, 1}), c));
}

TEST(Volume, Examples) {
    EXPECT_EQ(polytope_volume(hull_vertices(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))), 1);
    EXPECT_EQ(polytope_volume(hull_vertices(rpoints({{0, 0}, {1, 0}, {0, 1}}))), Rational(1, 2));
    // (1,1) lies inside the triangle on the other three points, so the hull has
    // area 3; the non-convex quadrilateral with that vertex order has area 5/2.
    std::vector<oracle::P2> q{{0, 0}, {3, 0}, {1, 1}, {0, 2}};
    auto quad = hull_vertices(rpoints({{0, 0}, {3, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(polytope_volume(quad), oracle::area2(q));
    EXPECT_EQ(polytope_volume(quad), 3);
    EXPECT_EQ(quad.vertices.size(), 3U);
    EXPECT_EQ(oracle::shoelace(q), Rational(5, 2));
}

TEST(Volume, DegenerateReportsFlag) {
    auto seg = hull_vertices(rpoints({{0, 0}, {2, 2}}));
    auto r = polytope_volume_or_zero(seg);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.volume, 0);
    EXPECT_EQ(kind_of([&] { polytope_volume(seg); }), ErrorKind::DegeneratePolytope);
}

TEST(Hull, SinglePoint) {
    auto p = hull_vertices(rpoints({{0, 0}}));
    EXPECT_EQ(p.vertices.size(), 1U);
    EXPECT_EQ(polytope_volume_or_zero(p).volume, 0);
}

TEST(Hull, CollinearMiddlePointRemoved) {
    auto p = hull_vertices(rpoints({{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(p.vertices, rpoints({{0, 2}, {2, 0}}));
    EXPECT_EQ(p.affine_dim(), 1);
    EXPECT_TRUE(p.contains(RationalPoint(LatticePoint{1, 1})));
    EXPECT_FALSE(p.contains(RationalPoint(LatticePoint{1, 0})));
    EXPECT_FALSE(p.contains(RationalPoint(LatticePoint{3, -1})));
}

TEST(Hull, TriangleKeepsAllVertices) {
    auto p = hull_vertices(rpoints({{3, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(p.vertices.size(), 3U);
    std::vector<oracle::P2> q{{3, 0}, {1, 1}, {0, 2}};
    EXPECT_EQ(oracle::hull2(q).size(), 3U);
}

TEST(Hull, ThreeDimensionalCubeAndSlice) {
    auto cube = hull_vertices(rpoints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_EQ(cube.vertices.size(), 8U);
    EXPECT_EQ(cube.halfspaces.size(), 6U);
    EXPECT_EQ(polytope_volume(cube), 1);
    auto tri = hull_vertices(rpoints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}));
    EXPECT_EQ(tri.affine_dim(), 2);
    EXPECT_EQ(tri.vertices.size(), 4U);
    EXPECT_TRUE(tri.contains(RationalPoint(RatVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)})));
}

TEST(HalfspaceEnumeration, SquareAndUnbounded) {
    std::vector<Halfspace> hs{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -2}, {{0, -1}, Rational(-1, 2)}};
    auto p = polytope_from_halfspaces(hs, 2);
    EXPECT_EQ(p.vertices.size(), 4U);
    EXPECT_EQ(polytope_volume(p), 1);
    std::vector<Halfspace> open{{{1, 0}, 0}, {{0, 1}, 0}};
    EXPECT_EQ(kind_of([&] { polytope_from_halfspaces(open, 2); }), ErrorKind::InvalidInput);
    std::vector<Halfspace> none{{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}};
    EXPECT_TRUE(polytope_from_halfspaces(none, 2).empty());
}

TEST(Lp, ConicHull) {
    std::vector<LatticePoint> g{LatticePoint{1, 0}, LatticePoint{1, 2}};
    EXPECT_TRUE(in_conic_hull(g, RationalPoint(LatticePoint{2, 1})));
    EXPECT_FALSE(in_conic_hull(g, RationalPoint(LatticePoint{0, 1})));
    EXPECT_TRUE(in_conic_hull(g, RationalPoint(LatticePoint{0, 0})));
}

// ------------------------------------------------------------ properties

namespace {

std::vector<LatticePoint> random_rays(std::mt19937_64& rng, std::size_t n, std::size_t count, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    std::vector<LatticePoint> out;
    while (out.size() < count) {
        IntVector v(n);
        for (auto& x : v) x = d(rng);
        LatticePoint p(v);
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<long>> as_long(const std::vector<LatticePoint>& pts) {
    std::vector<std::vector<long>> out;
    for (const auto& p : pts) {
        std::vector<long> v;
        for (const auto& x : p.coords) v.push_back(x.get_si());
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(Property, StrongConvexityMatchesFourierMotzkin) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 2;
        auto rays = random_rays(rng, n, 2 + trial % 3, 3);
        EXPECT_EQ(is_strongly_convex(rays), oracle::fm_strongly_convex(as_long(rays))) << "trial " << trial;
    }
}

TEST(Property, DualityRoundTrip) {
    std::mt19937_64 rng(5);
    int cones = 0;
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; cones < 10 && trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 3;
        // Rays in the open positive halfspace x_1 > 0 keep the cone pointed.
        auto rays = random_rays(rng, n, n + 2, 3);
        for (auto& r : rays) r[0] = abs(r[0]) + 1;
        RationalCone cone = [&] {
            try {
                return dual_description(rays);
            } catch (const Error&) {
                return orthant(n);
            }
        }();
        ++cones;
        for (int i = 0; i < 100; ++i) {
            IntVector p(cone.dim());
            for (auto& x : p) x = d(rng);
            LatticePoint lp(p);
            EXPECT_EQ(cone.contains(lp), in_conic_hull(cone.rays(), RationalPoint(lp)));
        }
        for (const auto& r : cone.rays())
            for (const auto& u : cone.facets()) EXPECT_GE(dot(u, r.coords), 0);
    }
    EXPECT_EQ(cones, 10);
}

TEST(Property, VolumeAdditivityUnderHyperplaneSplit) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 7; ++i) {
            IntVector v(n);
            for (auto& x : v) x = d(rng);
            pts.emplace_back(LatticePoint(v));
        }
        auto p = hull_vertices(pts);
        if (p.affine_dim() < static_cast<int>(n)) continue;
        IntVector u(n);
        do {
            for (auto& x : u) x = d(rng);
        } while (std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; }));
        const Rational c = make_rational(d(rng), 2);
        IntVector neg(u);
        for (auto& x : neg) x = -x;
        auto cut = [&](const IntVector& normal, const Rational& off) {
            std::vector<Halfspace> hs = p.halfspaces;
            hs.push_back(Halfspace{normal, off});
            return polytope_volume_or_zero(polytope_from_halfspaces(hs, n)).volume;
        };
        EXPECT_EQ(polytope_volume(p), cut(u, c) + cut(neg, -c)) << "trial " << trial;
    }
}

TEST(Property, VolumeTranslationAndScaling) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 6; ++i) {
            IntVector v(n);
            for (auto& x : v) x = d(rng);
            pts.emplace_back(LatticePoint(v));
        }
        const auto base = polytope_volume_or_zero(hull_vertices(pts)).volume;
        RationalPoint shift(RatVector(n, make_rational(d(rng), 3)));
        std::vector<RationalPoint> moved;
        for (const auto& p : pts) moved.push_back(p + shift);
        EXPECT_EQ(polytope_volume_or_zero(hull_vertices(moved)).volume, base);
        for (Rational lambda : {Rational(1, 2), Rational(2), Rational(3)}) {
            std::vector<RationalPoint> scaled;
            for (const auto& p : pts) scaled.push_back(lambda * p);
            EXPECT_EQ(polytope_volume_or_zero(hull_vertices(scaled)).volume, pow(lambda, static_cast<unsigned>(n)) * base);
        }
    }
}

TEST(Property, PlanarVolumeMatchesShoelace) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RationalPoint> pts;
        std::vector<oracle::P2> q;
        for (int i = 0; i < 8; ++i) {
            long x = d(rng), y = d(rng);
            pts.emplace_back(LatticePoint{x, y});
            q.emplace_back(x, y);
        }
        auto p = hull_vertices(pts);
        EXPECT_EQ(polytope_volume_or_zero(p).volume, oracle::area2(q));
        if (p.affine_dim() == 2) { EXPECT_EQ(p.vertices.size(), oracle::hull2(q).size()); }
    }
}
