#include "coconvex/regions.hpp"

#include "coconvex/detail/double_description.hpp"
#include "coconvex/error.hpp"

#include <algorithm>
#include <set>

namespace coconvex {

namespace {

// Rays scaled to the level set ℓ = 1.
std::vector<RationalPoint> unit_level_rays(const RationalCone& cone, const LinearFunctional& ell) {
    std::vector<RationalPoint> out;
    for (const auto& r : cone.rays()) out.push_back(Rational(1 / ell(r)) * RationalPoint(r));
    return out;
}

// Facets of conv(G) + C from the extreme rays of {(u, s) : u·g + s ≥ 0, u·r ≥ 0}.
std::vector<Halfspace> region_facets(const RationalCone& cone, const std::vector<RationalPoint>& gens) {
    const std::size_t n = cone.dim();
    std::vector<IntVector> rows;
    for (const auto& g : gens) {
        RatVector h = g.coords;
        h.push_back(1);
        const Integer l = lcm_of_denominators(h);
        IntVector row;
        for (const auto& x : h) row.emplace_back(x * l);
        rows.push_back(std::move(row));
    }
    for (const auto& r : cone.rays()) {
        IntVector row = r.coords;
        row.emplace_back(0);
        rows.push_back(std::move(row));
    }
    std::vector<Halfspace> out;
    for (const auto& w : detail::extreme_rays(rows, n + 1)) {
        IntVector u(w.begin(), w.begin() + static_cast<long>(n));
        if (std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; })) continue;
        Integer g = 0;
        for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        Rational offset = make_rational(-w[n], g);
        for (auto& x : u) x /= g;
        out.push_back(Halfspace{std::move(u), std::move(offset)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalPoint> region_vertices(const std::vector<Halfspace>& facets, const std::vector<RationalPoint>& gens,
                                           std::size_t n) {
    std::set<RationalPoint> out;
    for (const auto& g : gens) {
        RatMatrix tight;
        for (const auto& h : facets)
            if (h.is_tight(g)) tight.emplace_back(h.normal.begin(), h.normal.end());
        if (rank(tight) == n) out.insert(g);
    }
    return {out.begin(), out.end()};
}

void require_compatible(const NewtonRegion& a, const NewtonRegion& b) {
    if (!(a.cone() == b.cone()) || !(a.ell() == b.ell()))
        throw Error(ErrorKind::ConeMismatch, "regions have different cones or functionals");
}

}  // namespace

bool NewtonRegion::contains(const RationalPoint& p) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.contains(p); });
}

bool operator==(const NewtonRegion& a, const NewtonRegion& b) {
    return a.cone_ == b.cone_ && a.ell_ == b.ell_ && a.facets_ == b.facets_;
}

Rational cobounded_threshold(const RationalCone& cone, const std::vector<Halfspace>& facets,
                             const std::vector<RationalPoint>& generators, const LinearFunctional& ell) {
    if (std::all_of(facets.begin(), facets.end(), [](const Halfspace& h) { return h.offset <= 0; })) return 0;
    Rational start = 0;
    for (const auto& g : generators) start = std::max(start, ell(g));
    if (start <= 0) start = 1;
    const auto unit = unit_level_rays(cone, ell);
    const Rational cap = start * Rational(pow(Integer(2), 64));
    // On C ∩ {ℓ = T} the facet form u is minimised at a scaled ray, and that
    // minimum grows linearly in T.
    auto passes = [&](const Rational& t) {
        for (const auto& h : facets) {
            if (h.offset <= 0) continue;
            for (const auto& r : unit)
                if (t * dot(h.normal, r.coords) < h.offset) return false;
        }
        return true;
    };
    for (Rational t = start; t <= cap; t *= 2)
        if (passes(t)) return t;
    throw Error(ErrorKind::CapExceeded, "no threshold below 2^64 times the starting level");
}

NewtonRegion newton_region(const RationalCone& cone, const std::vector<RationalPoint>& generators, const LinearFunctional& ell) {
    if (generators.empty()) throw Error(ErrorKind::InvalidInput, "region needs at least one generator");
    if (ell.dim() != cone.dim()) throw Error(ErrorKind::InvalidInput, "functional dimension differs from cone");
    if (!is_positive_on_cone(ell, cone)) throw Error(ErrorKind::InvalidInput, "functional is not positive on the cone");
    for (const auto& g : generators) {
        if (g.dim() != cone.dim()) throw Error(ErrorKind::InvalidInput, "generator dimension differs from cone");
        if (!cone.contains(g)) throw Error(ErrorKind::InvalidInput, "generator lies outside the cone");
    }
    NewtonRegion r(cone, ell);
    r.facets_ = region_facets(cone, generators);
    r.generators_ = region_vertices(r.facets_, generators, cone.dim());
    try {
        r.threshold_ = cobounded_threshold(cone, r.facets_, r.generators_, ell);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
        throw Error(ErrorKind::NotCobounded, "the generators do not dominate every ray of the cone");
    }
    return r;
}

NewtonRegion newton_region(const RationalCone& cone, const std::vector<LatticePoint>& generators, const LinearFunctional& ell) {
    std::vector<RationalPoint> g;
    g.reserve(generators.size());
    for (const auto& p : generators) g.emplace_back(p);
    return newton_region(cone, g, ell);
}

NewtonRegion cone_region(const RationalCone& cone, const LinearFunctional& ell) {
    return newton_region(cone, std::vector<RationalPoint>{RationalPoint(RatVector(cone.dim(), Rational(0)))}, ell);
}

Rational covol_at(const NewtonRegion& region, const Rational& level) {
    if (level < region.threshold()) throw Error(ErrorKind::InvalidInput, "level below the certified threshold");
    if (region.is_whole_cone()) return 0;
    const std::size_t n = region.dim();
    std::vector<RationalPoint> corner{RationalPoint(RatVector(n, Rational(0)))};
    for (const auto& r : unit_level_rays(region.cone(), region.ell())) corner.push_back(level * r);
    const Rational outer = polytope_volume(hull_vertices(corner));

    // ℓ(x) ≤ T as a primitive integer halfspace.
    RatVector neg = region.ell().coeffs();
    for (auto& x : neg) x = -x;
    const Integer l = lcm_of_denominators(neg);
    IntVector u;
    for (const auto& x : neg) u.emplace_back(x * l);
    Integer g = 0;
    for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : u) x /= g;
    std::vector<Halfspace> hs = region.facets();
    hs.push_back(Halfspace{std::move(u), -level * l / g});
    const Rational inner = polytope_volume_or_zero(polytope_from_halfspaces(hs, n)).volume;
    return outer - inner;
}

Rational covol(const NewtonRegion& region) { return covol_at(region, region.threshold()); }

NewtonRegion minkowski_sum(const NewtonRegion& a, const NewtonRegion& b) {
    require_compatible(a, b);
    std::set<RationalPoint> sums;
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) sums.insert(x + y);
    return newton_region(a.cone(), std::vector<RationalPoint>(sums.begin(), sums.end()), a.ell());
}

NewtonRegion scale(const NewtonRegion& region, const Rational& lambda) {
    if (lambda <= 0) throw Error(ErrorKind::NonpositiveScalar, "scale factor must be positive, got " + to_string(lambda));
    std::vector<RationalPoint> g;
    for (const auto& p : region.generators()) g.push_back(lambda * p);
    return newton_region(region.cone(), g, region.ell());
}

std::vector<RationalPolytope> newton_diagram(const NewtonRegion& region) {
    std::vector<RationalPolytope> out;
    for (const auto& h : region.facets()) {
        const bool bounded = std::all_of(region.cone().rays().begin(), region.cone().rays().end(),
                                         [&](const LatticePoint& r) { return dot(h.normal, r.coords) > 0; });
        if (!bounded) continue;
        std::vector<RationalPoint> face;
        for (const auto& v : region.generators())
            if (h.is_tight(v)) face.push_back(v);
        out.push_back(hull_vertices(face));
    }
    std::sort(out.begin(), out.end(), [](const RationalPolytope& x, const RationalPolytope& y) { return x.vertices < y.vertices; });
    return out;
}

Rational mixed_covol(const std::vector<NewtonRegion>& regions) {
    if (regions.empty()) throw Error(ErrorKind::WrongArity, "mixed covolume needs n regions");
    const std::size_t n = regions.front().dim();
    if (regions.size() != n)
        throw Error(ErrorKind::WrongArity, "mixed covolume needs exactly " + std::to_string(n) + " regions, got " +
                                               std::to_string(regions.size()));
    for (const auto& r : regions) require_compatible(regions.front(), r);
    Rational total = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::optional<NewtonRegion> sum;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1U)) continue;
            ++size;
            sum = sum ? minkowski_sum(*sum, regions[i]) : regions[i];
        }
        const Rational c = covol(*sum);
        total += (n - size) % 2 == 0 ? c : Rational(-c);
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace coconvex
