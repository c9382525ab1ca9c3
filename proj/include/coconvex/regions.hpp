#pragma once

// Cobounded C-convex regions Γ = conv(G) + C and their covolumes.

#include "coconvex/exactgeom.hpp"

#include <optional>
#include <vector>

namespace coconvex {

class NewtonRegion {
public:
    const RationalCone& cone() const { return cone_; }
    const LinearFunctional& ell() const { return ell_; }
    std::size_t dim() const { return cone_.dim(); }
    /// Vertices of Γ; the input generators with redundant ones removed.
    const std::vector<RationalPoint>& generators() const { return generators_; }
    /// Γ = {x : u·x ≥ c for every facet}, including the facets of C.
    const std::vector<Halfspace>& facets() const { return facets_; }
    /// Certified level: C ∩ {ℓ ≥ T} ⊆ Γ.
    const Rational& threshold() const { return threshold_; }

    bool contains(const RationalPoint& p) const;
    bool contains(const LatticePoint& p) const { return contains(RationalPoint(p)); }
    bool is_whole_cone() const { return threshold_ == 0; }

    /// Same cone, same ℓ, same facet set.
    friend bool operator==(const NewtonRegion& a, const NewtonRegion& b);

private:
    friend NewtonRegion newton_region(const RationalCone&, const std::vector<RationalPoint>&, const LinearFunctional&);
    NewtonRegion(RationalCone cone, LinearFunctional ell) : cone_(std::move(cone)), ell_(std::move(ell)) {}

    RationalCone cone_;
    LinearFunctional ell_;
    std::vector<RationalPoint> generators_;
    std::vector<Halfspace> facets_;
    Rational threshold_;
};

/// Throws InvalidInput when G is empty, G ⊄ C or ℓ is not positive on C, and
/// NotCobounded when C \ Γ is unbounded.
NewtonRegion newton_region(const RationalCone& cone, const std::vector<RationalPoint>& generators, const LinearFunctional& ell);
NewtonRegion newton_region(const RationalCone& cone, const std::vector<LatticePoint>& generators, const LinearFunctional& ell);

/// Γ = C, the identity for Minkowski sums.
NewtonRegion cone_region(const RationalCone& cone, const LinearFunctional& ell);

/// Doubling search from max ℓ(g). Throws CapExceeded past 2⁶⁴ times the start.
Rational cobounded_threshold(const RationalCone& cone, const std::vector<Halfspace>& facets,
                             const std::vector<RationalPoint>& generators, const LinearFunctional& ell);
inline Rational cobounded_threshold(const NewtonRegion& r) { return r.threshold(); }

Rational covol(const NewtonRegion& region);
/// vol(C ∩ ℓ≤T) − vol(Γ ∩ ℓ≤T); requires T ≥ threshold.
Rational covol_at(const NewtonRegion& region, const Rational& level);

/// Throws ConeMismatch unless both regions share C and ℓ.
NewtonRegion minkowski_sum(const NewtonRegion& a, const NewtonRegion& b);
/// Throws NonpositiveScalar unless λ > 0.
NewtonRegion scale(const NewtonRegion& region, const Rational& lambda);

/// Bounded facets of Γ (normals strictly positive on C \ {0}), sorted.
std::vector<RationalPolytope> newton_diagram(const NewtonRegion& region);

/// Mixed covolume by inclusion–exclusion over the 2ⁿ − 1 partial sums.
/// Throws WrongArity unless exactly n regions are given.
Rational mixed_covol(const std::vector<NewtonRegion>& regions);

class CoconvexBody {
public:
    explicit CoconvexBody(NewtonRegion region) : region_(std::move(region)), covolume_(coconvex::covol(region_)) {}
    const NewtonRegion& region() const { return region_; }
    const Rational& covolume() const { return covolume_; }

private:
    NewtonRegion region_;
    Rational covolume_;
};

}  // namespace coconvex
