#pragma once

// Exact polyhedral geometry in small dimension: lattice and rational points,
// linear functionals, rational polyhedral cones with both descriptions,
// bounded polytopes with both descriptions, and exact volume.

#include "coconvex/arith.hpp"
#include "coconvex/linalg.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace coconvex {

using IntVector = std::vector<Integer>;

struct LatticePoint {
    IntVector coords;

    LatticePoint() = default;
    explicit LatticePoint(IntVector c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<long> c);

    std::size_t dim() const { return coords.size(); }
    const Integer& operator[](std::size_t i) const { return coords[i]; }
    Integer& operator[](std::size_t i) { return coords[i]; }
    bool is_zero() const;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords == b.coords; }
    friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator*(const Integer& k, const LatticePoint& a);

struct RationalPoint {
    RatVector coords;

    RationalPoint() = default;
    explicit RationalPoint(RatVector c) : coords(std::move(c)) {}
    explicit RationalPoint(const LatticePoint& p);

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    bool is_integral() const;
    /// Throws Error(InvalidInput) when some coordinate is not an integer.
    LatticePoint to_lattice() const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
    friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b);
};

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& k, const RationalPoint& a);

/// Nonzero linear form x ↦ Σ coeffs[i]·x[i].
class LinearFunctional {
public:
    explicit LinearFunctional(RatVector coeffs);
    static LinearFunctional from_integers(const IntVector& coeffs);

    std::size_t dim() const { return coeffs_.size(); }
    const RatVector& coeffs() const { return coeffs_; }

    Rational operator()(const LatticePoint& p) const;
    Rational operator()(const RationalPoint& p) const;
    Rational operator()(const IntVector& v) const;

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

private:
    RatVector coeffs_;
};

/// The closed halfspace {x : normal·x ≥ offset}; normal is a primitive
/// integer vector.
struct Halfspace {
    IntVector normal;
    Rational offset;

    bool contains(const RationalPoint& p) const;
    bool is_tight(const RationalPoint& p) const;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend std::strong_ordering operator<=>(const Halfspace& a, const Halfspace& b);
};

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// Full-dimensional, strongly convex rational polyhedral cone with its
/// extreme rays and facet normals. Rays and normals are primitive and sorted.
class RationalCone {
public:
    std::size_t dim() const { return dim_; }
    const std::vector<LatticePoint>& rays() const { return rays_; }
    /// Inner facet normals u: the cone is {x : u·x ≥ 0 for every u}.
    const std::vector<IntVector>& facets() const { return facets_; }

    bool contains(const LatticePoint& p) const;
    bool contains(const RationalPoint& p) const;
    /// A default functional positive on the cone minus the origin: the sum of
    /// the facet normals.
    LinearFunctional default_functional() const;

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.dim_ == b.dim_ && a.facets_ == b.facets_;
    }

private:
    friend RationalCone dual_description(const std::vector<LatticePoint>& rays);
    RationalCone() = default;

    std::size_t dim_ = 0;
    std::vector<LatticePoint> rays_;
    std::vector<IntVector> facets_;
};

RationalCone dual_description(const std::vector<LatticePoint>& rays);
RationalCone orthant(std::size_t n);

bool is_positive_on_cone(const LinearFunctional& ell, const RationalCone& cone);

/// Bounded polytope with V- and H-descriptions. Lower-dimensional polytopes
/// carry their affine hull as pairs of opposite halfspaces.
struct RationalPolytope {
    std::size_t ambient_dim = 0;
    std::vector<RationalPoint> vertices;
    std::vector<Halfspace> halfspaces;

    bool empty() const { return vertices.empty(); }
    /// Dimension of the affine hull of the vertices, -1 when empty.
    int affine_dim() const;
    bool contains(const RationalPoint& p) const;
};

RationalPolytope hull_vertices(const std::vector<RationalPoint>& points);

/// Vertex enumeration for {x : h.normal·x ≥ h.offset}. Throws
/// Error(InvalidInput) when the set is unbounded.
RationalPolytope polytope_from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t n);

struct VolumeResult {
    Rational volume;
    bool degenerate = false;
};

/// Exact volume; throws Error(DegeneratePolytope) if P is lower-dimensional.
Rational polytope_volume(const RationalPolytope& p);
/// Same, but lower-dimensional input reports {0, degenerate = true}.
VolumeResult polytope_volume_or_zero(const RationalPolytope& p);

/// A point x ≥ 0 with a·x = b, if one exists (exact two-phase simplex,
/// Bland's rule).
std::optional<RatVector> lp_feasible(const RatMatrix& a, const RatVector& b);

/// Is p a nonnegative combination of the given vectors? Decided by lp_feasible.
bool in_conic_hull(const std::vector<LatticePoint>& generators, const RationalPoint& p);

/// True when no nonzero nonnegative combination of the vectors sums to zero.
bool is_strongly_convex(const std::vector<LatticePoint>& generators);

}  // namespace coconvex
