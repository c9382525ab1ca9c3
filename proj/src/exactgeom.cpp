#include "coconvex/exactgeom.hpp"

#include "coconvex/detail/double_description.hpp"
#include "coconvex/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coconvex {

namespace {

template <class T>
std::strong_ordering lex_compare(const std::vector<T>& a, const std::vector<T>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw Error(ErrorKind::InvalidInput, std::string("dimension mismatch in ") + what);
}

}  // namespace

// ---------------------------------------------------------------- points

LatticePoint::LatticePoint(std::initializer_list<long> c) {
    coords.reserve(c.size());
    for (long x : c) coords.emplace_back(x);
}

bool LatticePoint::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) { return lex_compare(a.coords, b.coords); }

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    require_same_dim(a.dim(), b.dim(), "point sum");
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
    return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    require_same_dim(a.dim(), b.dim(), "point difference");
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

LatticePoint operator*(const Integer& k, const LatticePoint& a) {
    LatticePoint r = a;
    for (auto& x : r.coords) x *= k;
    return r;
}

RationalPoint::RationalPoint(const LatticePoint& p) {
    coords.reserve(p.dim());
    for (const auto& x : p.coords) coords.emplace_back(x);
}

bool RationalPoint::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x.get_den() == 1; });
}

LatticePoint RationalPoint::to_lattice() const {
    if (!is_integral()) throw Error(ErrorKind::InvalidInput, "point has non-integral coordinates");
    IntVector c;
    c.reserve(coords.size());
    for (const auto& x : coords) c.emplace_back(x.get_num());
    return LatticePoint(std::move(c));
}

std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) { return lex_compare(a.coords, b.coords); }

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    require_same_dim(a.dim(), b.dim(), "point sum");
    RationalPoint r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
    return r;
}

RationalPoint operator*(const Rational& k, const RationalPoint& a) {
    RationalPoint r = a;
    for (auto& x : r.coords) x *= k;
    return r;
}

// ---------------------------------------------------------------- functionals

LinearFunctional::LinearFunctional(RatVector coeffs) : coeffs_(std::move(coeffs)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; }))
        throw Error(ErrorKind::InvalidInput, "linear functional must be nonzero");
}

LinearFunctional LinearFunctional::from_integers(const IntVector& coeffs) {
    RatVector r;
    r.reserve(coeffs.size());
    for (const auto& x : coeffs) r.emplace_back(x);
    return LinearFunctional(std::move(r));
}

Rational LinearFunctional::operator()(const LatticePoint& p) const { return (*this)(p.coords); }

Rational LinearFunctional::operator()(const IntVector& v) const {
    require_same_dim(dim(), v.size(), "functional evaluation");
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += coeffs_[i] * v[i];
    return s;
}

Rational LinearFunctional::operator()(const RationalPoint& p) const {
    require_same_dim(dim(), p.dim(), "functional evaluation");
    return coconvex::dot(coeffs_, p.coords);
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool Halfspace::contains(const RationalPoint& p) const { return dot(normal, p.coords) >= offset; }
bool Halfspace::is_tight(const RationalPoint& p) const { return dot(normal, p.coords) == offset; }

std::strong_ordering operator<=>(const Halfspace& a, const Halfspace& b) {
    auto c = lex_compare(a.normal, b.normal);
    if (c != 0) return c;
    int o = cmp(a.offset, b.offset);
    return o < 0 ? std::strong_ordering::less : o > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// ---------------------------------------------------------------- cones

bool RationalCone::contains(const LatticePoint& p) const {
    for (const auto& u : facets_)
        if (dot(u, p.coords) < 0) return false;
    return true;
}

bool RationalCone::contains(const RationalPoint& p) const {
    for (const auto& u : facets_)
        if (dot(u, p.coords) < 0) return false;
    return true;
}

LinearFunctional RationalCone::default_functional() const {
    IntVector sum(dim_, Integer(0));
    for (const auto& u : facets_)
        for (std::size_t i = 0; i < dim_; ++i) sum[i] += u[i];
    return LinearFunctional::from_integers(sum);
}

RationalCone dual_description(const std::vector<LatticePoint>& rays) {
    if (rays.empty()) throw Error(ErrorKind::InvalidInput, "cone needs at least one ray");
    const std::size_t n = rays.front().dim();
    std::vector<LatticePoint> nonzero;
    for (const auto& r : rays) {
        require_same_dim(r.dim(), n, "cone rays");
        if (!r.is_zero()) nonzero.push_back(r);
    }
    if (nonzero.empty() || !is_strongly_convex(nonzero))
        throw Error(ErrorKind::NotStronglyConvex, "cone contains a line");

    std::vector<IntVector> rows;
    for (const auto& r : nonzero) rows.push_back(r.coords);
    if (rank(to_rational(rows)) < n) throw Error(ErrorKind::NotFullDimensional, "rays span a proper subspace");

    RationalCone cone;
    cone.dim_ = n;
    // Facet normals of cone(R) are the extreme rays of the dual {u : R u ≥ 0}.
    cone.facets_ = detail::extreme_rays(rows, n);

    std::set<LatticePoint> extreme;
    for (const auto& r : nonzero) {
        RatMatrix tight;
        for (const auto& u : cone.facets_)
            if (dot(u, r.coords) == 0) tight.push_back(to_rational({u}).front());
        if (rank(tight) == n - 1) extreme.insert(LatticePoint(primitive(r.coords)));
    }
    cone.rays_.assign(extreme.begin(), extreme.end());
    return cone;
}

RationalCone orthant(std::size_t n) {
    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    return dual_description(rays);
}

bool is_positive_on_cone(const LinearFunctional& ell, const RationalCone& cone) {
    require_same_dim(ell.dim(), cone.dim(), "is_positive_on_cone");
    return std::all_of(cone.rays().begin(), cone.rays().end(), [&](const LatticePoint& r) { return ell(r) > 0; });
}

// ---------------------------------------------------------------- polytopes

namespace {

int affine_dim_of(const std::vector<RationalPoint>& pts) {
    if (pts.empty()) return -1;
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector d(pts[i].dim());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(std::move(diffs)));
}

Halfspace make_halfspace(const RatVector& normal, const Rational& offset) {
    // normal·x ≥ offset, rescaled so the normal is a primitive integer vector.
    Integer l = lcm_of_denominators(normal);
    IntVector u;
    u.reserve(normal.size());
    for (const auto& x : normal) u.emplace_back(x * l);
    Integer g = 0;
    for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : u) x /= g;
    return Halfspace{std::move(u), offset * l / g};
}

std::vector<RationalPoint> dedupe(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Hull of points whose affine hull is all of Rⁿ.
RationalPolytope full_dimensional_hull(const std::vector<RationalPoint>& pts, std::size_t n) {
    std::vector<IntVector> rows;
    for (const auto& p : pts) {
        RatVector h = p.coords;
        h.push_back(1);
        Integer l = lcm_of_denominators(h);
        IntVector row;
        for (const auto& x : h) row.emplace_back(x * l);
        rows.push_back(std::move(row));
    }
    RationalPolytope poly;
    poly.ambient_dim = n;
    for (const auto& w : detail::extreme_rays(rows, n + 1)) {
        IntVector u(w.begin(), w.begin() + static_cast<long>(n));
        RatVector ur(u.begin(), u.end());
        poly.halfspaces.push_back(make_halfspace(ur, Rational(-w[n])));
    }
    for (const auto& p : pts) {
        RatMatrix tight;
        for (const auto& h : poly.halfspaces)
            if (h.is_tight(p)) tight.push_back(RatVector(h.normal.begin(), h.normal.end()));
        if (rank(tight) == n) poly.vertices.push_back(p);
    }
    std::sort(poly.halfspaces.begin(), poly.halfspaces.end());
    return poly;
}

}  // namespace

int RationalPolytope::affine_dim() const { return affine_dim_of(vertices); }

bool RationalPolytope::contains(const RationalPoint& p) const {
    return !empty() && std::all_of(halfspaces.begin(), halfspaces.end(), [&](const Halfspace& h) { return h.contains(p); });
}

RationalPolytope hull_vertices(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw Error(ErrorKind::InvalidInput, "hull of an empty point set");
    const std::size_t n = points.front().dim();
    for (const auto& p : points) require_same_dim(p.dim(), n, "hull_vertices");
    auto pts = dedupe(points);
    const int d = affine_dim_of(pts);
    if (static_cast<std::size_t>(d) == n) return full_dimensional_hull(pts, n);

    // Lower-dimensional: hull inside the affine span, then lift back.
    const RationalPoint& origin = pts.front();
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = pts[i][k] - origin[k];
        diffs.push_back(std::move(v));
    }
    RatMatrix basis;
    for (auto i : independent_rows(diffs)) basis.push_back(diffs[i]);

    RationalPolytope poly;
    poly.ambient_dim = n;
    // Affine hull equations: N·x = N·origin for every N ⟂ span(basis).
    for (const auto& nv : nullspace(basis, n)) {
        const Rational c = dot(nv, origin.coords);
        RatVector neg(nv);
        for (auto& x : neg) x = -x;
        poly.halfspaces.push_back(make_halfspace(nv, c));
        poly.halfspaces.push_back(make_halfspace(neg, -c));
    }
    if (d == 0) {
        poly.vertices = {origin};
        std::sort(poly.halfspaces.begin(), poly.halfspaces.end());
        return poly;
    }

    // Coordinates y in the span: pick d columns where the basis is invertible.
    RatMatrix transposed(n, RatVector(static_cast<std::size_t>(d)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < basis.size(); ++j) transposed[k][j] = basis[j][k];
    const auto cols = independent_rows(transposed);
    RatMatrix square;  // square[r][j] = basis[j][cols[r]]
    for (auto c : cols) square.push_back(transposed[c]);
    auto coords_of = [&](const RationalPoint& p) {
        RatVector rhs;
        for (auto c : cols) rhs.push_back(p[c] - origin[c]);
        return RationalPoint(*solve(square, rhs));
    };
    std::vector<RationalPoint> local;
    for (const auto& p : pts) local.push_back(coords_of(p));
    RationalPolytope inner = full_dimensional_hull(local, static_cast<std::size_t>(d));

    // Inner halfspace w·y ≥ c with y = M(x − origin) restricted to the chosen
    // coordinates, where M = square⁻¹.
    RatMatrix inverse(static_cast<std::size_t>(d), RatVector(static_cast<std::size_t>(d)));
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
        RatVector e(static_cast<std::size_t>(d), Rational(0));
        e[j] = 1;
        auto col = solve(square, e);
        for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) inverse[i][j] = (*col)[i];
    }
    for (const auto& h : inner.halfspaces) {
        RatVector normal(n, Rational(0));
        for (std::size_t r = 0; r < cols.size(); ++r) {
            Rational coef = 0;
            for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) coef += h.normal[i] * inverse[i][r];
            normal[cols[r]] = coef;
        }
        poly.halfspaces.push_back(make_halfspace(normal, h.offset + dot(normal, origin.coords)));
    }
    for (const auto& p : pts) {
        if (std::find(inner.vertices.begin(), inner.vertices.end(), coords_of(p)) != inner.vertices.end())
            poly.vertices.push_back(p);
    }
    std::sort(poly.halfspaces.begin(), poly.halfspaces.end());
    return poly;
}

RationalPolytope polytope_from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t n) {
    std::vector<IntVector> rows;
    std::vector<Halfspace> canonical = halfspaces;
    for (auto& h : canonical) {
        require_same_dim(h.normal.size(), n, "polytope_from_halfspaces");
        h.offset.canonicalize();
        const Integer den = h.offset.get_den();
        IntVector row;
        for (const auto& x : h.normal) row.push_back(x * den);
        row.push_back(-Integer(h.offset.get_num()));
        rows.push_back(std::move(row));
    }
    IntVector t(n + 1, Integer(0));
    t[n] = 1;
    rows.push_back(t);
    if (rank(to_rational(rows)) < n + 1) throw Error(ErrorKind::InvalidInput, "halfspaces do not bound a polytope");

    RationalPolytope poly;
    poly.ambient_dim = n;
    poly.halfspaces = std::move(canonical);
    for (const auto& w : detail::extreme_rays(rows, n + 1)) {
        if (w[n] == 0) throw Error(ErrorKind::InvalidInput, "halfspaces do not bound a polytope");
        RatVector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(make_rational(w[i], w[n]));
        poly.vertices.emplace_back(std::move(v));
    }
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

// ---------------------------------------------------------------- volume

namespace {

using VertexSet = std::vector<std::size_t>;  // sorted indices into vertices

struct Triangulator {
    const RationalPolytope& poly;
    std::vector<std::vector<bool>> tight;  // tight[h][v]
    std::map<VertexSet, std::vector<VertexSet>> memo;

    explicit Triangulator(const RationalPolytope& p) : poly(p) {
        for (const auto& h : p.halfspaces) {
            std::vector<bool> row;
            for (const auto& v : p.vertices) row.push_back(h.is_tight(v));
            tight.push_back(std::move(row));
        }
    }

    int dim_of(const VertexSet& s) const {
        std::vector<RationalPoint> pts;
        for (auto i : s) pts.push_back(poly.vertices[i]);
        return affine_dim_of(pts);
    }

    // Pulling triangulation: cone from the lexicographically smallest vertex
    // over the triangulations of the subfaces that avoid it.
    std::vector<VertexSet> triangulate(const VertexSet& face, int dim) {
        if (dim == 0) return {VertexSet{face.front()}};
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;

        const std::size_t apex = face.front();  // vertices are sorted lexicographically
        std::set<VertexSet> subfaces;
        for (const auto& row : tight) {
            VertexSet sub;
            for (auto v : face)
                if (row[v]) sub.push_back(v);
            if (sub.size() == face.size() || sub.empty()) continue;
            if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
            if (dim_of(sub) == dim - 1) subfaces.insert(std::move(sub));
        }
        std::vector<VertexSet> simplices;
        for (const auto& sub : subfaces) {
            for (auto simplex : triangulate(sub, dim - 1)) {
                simplex.insert(simplex.begin(), apex);
                simplices.push_back(std::move(simplex));
            }
        }
        memo.emplace(face, simplices);
        return simplices;
    }
};

}  // namespace

VolumeResult polytope_volume_or_zero(const RationalPolytope& p) {
    const std::size_t n = p.ambient_dim;
    if (p.empty() || p.affine_dim() < static_cast<int>(n)) return {Rational(0), true};
    RationalPolytope sorted = p;
    std::sort(sorted.vertices.begin(), sorted.vertices.end());
    Triangulator tri(sorted);
    VertexSet all(sorted.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Rational total = 0;
    for (const auto& simplex : tri.triangulate(all, static_cast<int>(n))) {
        RatMatrix m;
        const auto& base = sorted.vertices[simplex[0]];
        for (std::size_t k = 1; k < simplex.size(); ++k) {
            RatVector row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = sorted.vertices[simplex[k]][i] - base[i];
            m.push_back(std::move(row));
        }
        total += abs(determinant(std::move(m)));
    }
    return {total / Rational(factorial(static_cast<unsigned>(n))), false};
}

Rational polytope_volume(const RationalPolytope& p) {
    auto r = polytope_volume_or_zero(p);
    if (r.degenerate) throw Error(ErrorKind::DegeneratePolytope, "polytope is lower-dimensional");
    return r.volume;
}

// ---------------------------------------------------------------- LP

std::optional<RatVector> lp_feasible(const RatMatrix& a, const RatVector& b) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a.front().size();
    if (m == 0) return RatVector{};
    // Tableau columns: k originals, m artificials, rhs.
    const std::size_t width = k + m + 1;
    RatMatrix t(m, RatVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][k + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = k + i;
    }
    // Reduced costs of the phase-one objective Σ artificials; last entry is -value.
    RatVector obj(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) obj[j] -= t[i][j];
        obj[width - 1] -= t[i][width - 1];
    }
    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one
        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        const Rational f = obj[enter];
        for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    if (obj[width - 1] != 0) return std::nullopt;
    RatVector x(k, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < k) x[basis[i]] = t[i][width - 1];
    return x;
}

bool in_conic_hull(const std::vector<LatticePoint>& generators, const RationalPoint& p) {
    const std::size_t n = p.dim();
    RatMatrix a(n, RatVector(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = generators[j][i];
    return lp_feasible(a, p.coords).has_value();
}

bool is_strongly_convex(const std::vector<LatticePoint>& generators) {
    std::vector<LatticePoint> nz;
    for (const auto& g : generators)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return true;
    const std::size_t n = nz.front().dim();
    // Σ λ_j g_j = 0, Σ λ_j = 1, λ ≥ 0 is feasible iff the cone contains a line.
    RatMatrix a(n + 1, RatVector(nz.size()));
    for (std::size_t j = 0; j < nz.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = nz[j][i];
        a[n][j] = 1;
    }
    RatVector b(n + 1, Rational(0));
    b[n] = 1;
    return !lp_feasible(a, b).has_value();
}

}  // namespace coconvex
