#include "coconvex/semigroups.hpp"

#include "coconvex/error.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace coconvex {

namespace {

using Coords = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "facet coordinate overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "facet coordinate overflow");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// The cone in facet coordinates F(x) = (u_j·x)_j: x ∈ C iff F(x) ≥ 0, and
// x ∈ g + C iff F(x) ≥ F(g) componentwise. ℓ is kept scaled to integers.
struct Frame {
    std::vector<Coords> normals;
    Coords ell;  // integral multiple of ℓ
    Integer ell_scale;

    explicit Frame(const LatticeSemigroup& s) {
        for (const auto& u : s.cone().facets()) {
            Coords c;
            for (const auto& x : u) c.push_back(to_int64(x));
            normals.push_back(std::move(c));
        }
        ell_scale = lcm_of_denominators(s.ell().coeffs());
        for (const auto& x : s.ell().coeffs()) ell.push_back(to_int64(Integer(x * ell_scale)));
    }

    Coords facet(const Coords& x) const {
        Coords f(normals.size(), 0);
        for (std::size_t j = 0; j < normals.size(); ++j)
            for (std::size_t i = 0; i < x.size(); ++i) f[j] = checked_add(f[j], checked_mul(normals[j][i], x[i]));
        return f;
    }

    std::int64_t level(const Coords& x) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(ell[i], x[i]));
        return s;
    }
};

Coords to_coords(const LatticePoint& p) {
    Coords c;
    for (const auto& x : p.coords) c.push_back(to_int64(x));
    return c;
}

LatticePoint to_point(const Coords& c) {
    IntVector v;
    for (auto x : c) v.emplace_back(static_cast<long>(x));
    return LatticePoint(std::move(v));
}

bool geq(const Coords& a, const Coords& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

struct Element {
    std::int64_t level;
    Coords x;
    Coords f;
    bool operator<(const Element& o) const { return level != o.level ? level < o.level : x < o.x; }
    bool operator==(const Element& o) const { return x == o.x; }
};

// Minimal elements: sorted by level, an element survives if it dominates
// nothing kept so far. Dominance strictly raises the level unless equal.
std::vector<Element> prune(std::vector<Element> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Element> kept;
    for (auto& p : pts) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (geq(p.f, k.f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(p));
    }
    return kept;
}

std::vector<Element> elements(const Frame& fr, const std::vector<LatticePoint>& pts) {
    std::vector<Element> out;
    for (const auto& p : pts) {
        auto x = to_coords(p);
        out.push_back(Element{fr.level(x), x, fr.facet(x)});
    }
    return out;
}

std::vector<LatticePoint> points_of(const std::vector<Element>& els) {
    std::vector<LatticePoint> out;
    for (const auto& e : els) out.push_back(to_point(e.x));
    return out;
}

std::vector<Element> sum_prune(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b) {
            Element e{checked_add(p.level, q.level), p.x, p.f};
            for (std::size_t i = 0; i < e.x.size(); ++i) e.x[i] = checked_add(e.x[i], q.x[i]);
            for (std::size_t i = 0; i < e.f.size(); ++i) e.f[i] = checked_add(e.f[i], q.f[i]);
            sums.push_back(std::move(e));
        }
    return prune(std::move(sums));
}

// Integer box containing C ∩ {ℓ ≤ B}: the hull of 0 and the points B·r/ℓ(r).
std::pair<Coords, Coords> window_box(const LatticeSemigroup& s, const Rational& bound) {
    const std::size_t n = s.dim();
    Coords lo(n, 0), hi(n, 0);
    for (const auto& r : s.cone().rays()) {
        const Rational t = bound / s.ell()(r);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational c = t * r[i];
            lo[i] = std::min(lo[i], to_int64(floor(c)));
            hi[i] = std::max(hi[i], to_int64(ceil(c)));
        }
    }
    return {lo, hi};
}

// Calls visit(x) for every integer x in the box, last coordinate fastest.
template <class F>
void for_each_in_box(const Coords& lo, const Coords& hi, F&& visit) {
    const std::size_t n = lo.size();
    Coords x = lo;
    for (;;) {
        visit(x);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

// Points of S with lo_level ≤ ℓ < hi_level (levels in unscaled ℓ units).
std::vector<Element> window_points(const LatticeSemigroup& s, const Frame& fr, const Rational& lo_level,
                                   const Rational& hi_level) {
    std::vector<Element> out;
    if (hi_level <= 0) return out;
    auto [lo, hi] = window_box(s, hi_level);
    const Rational lo_s = lo_level * fr.ell_scale;
    const Rational hi_s = hi_level * fr.ell_scale;
    for_each_in_box(lo, hi, [&](const Coords& x) {
        auto f = fr.facet(x);
        for (auto v : f)
            if (v < 0) return;
        const std::int64_t l = fr.level(x);
        if (Rational(l) < lo_s || Rational(l) >= hi_s) return;
        out.push_back(Element{l, x, std::move(f)});
    });
    std::sort(out.begin(), out.end());
    return out;
}

Rational level_of(const Frame& fr, std::int64_t scaled) { return make_rational(Integer(static_cast<long>(scaled)), fr.ell_scale); }

}  // namespace

// ---------------------------------------------------------------- semigroup

LatticeSemigroup::LatticeSemigroup(RationalCone cone) : cone_(std::move(cone)), ell_(cone_.default_functional()) {}

LatticeSemigroup::LatticeSemigroup(RationalCone cone, LinearFunctional ell) : cone_(std::move(cone)), ell_(std::move(ell)) {
    if (ell_.dim() != cone_.dim() || !is_positive_on_cone(ell_, cone_))
        throw Error(ErrorKind::InvalidInput, "functional is not positive on the cone");
}

SemigroupIdealSet::SemigroupIdealSet(LatticeSemigroup semigroup, const std::vector<LatticePoint>& generators)
    : semigroup_(std::move(semigroup)) {
    if (generators.empty()) throw Error(ErrorKind::InvalidInput, "ideal needs at least one generator");
    for (const auto& g : generators) {
        if (g.dim() != semigroup_.dim()) throw Error(ErrorKind::InvalidInput, "generator dimension differs from the semigroup");
        if (!semigroup_.contains(g)) throw Error(ErrorKind::InvalidInput, "generator lies outside the semigroup");
    }
    Frame fr(semigroup_);
    generators_ = points_of(prune(elements(fr, generators)));
}

bool SemigroupIdealSet::contains(const LatticePoint& p) const {
    if (!semigroup_.contains(p)) return false;
    for (const auto& g : generators_)
        if (semigroup_.contains(p - g)) return true;
    return false;
}

bool SemigroupIdealSet::is_m_primary() const {
    for (const auto& r : semigroup_.cone().rays()) {
        const bool hit = std::any_of(generators_.begin(), generators_.end(), [&](const LatticePoint& g) {
            return g.is_zero() || rank(to_rational({g.coords, r.coords})) == 1;
        });
        if (!hit) return false;
    }
    return true;
}

SemigroupIdealSet whole_semigroup(const LatticeSemigroup& s) {
    return SemigroupIdealSet(s, {LatticePoint(IntVector(s.dim(), Integer(0)))});
}

SemigroupIdealSet ideal_sum(const SemigroupIdealSet& a, const SemigroupIdealSet& b) {
    if (!(a.semigroup() == b.semigroup())) throw Error(ErrorKind::ConeMismatch, "ideals live in different semigroups");
    Frame fr(a.semigroup());
    return SemigroupIdealSet(a.semigroup(), points_of(sum_prune(elements(fr, a.min_generators()), elements(fr, b.min_generators()))));
}

std::vector<SemigroupIdealSet> ideal_powers(const SemigroupIdealSet& ideal, unsigned kmax) {
    Frame fr(ideal.semigroup());
    const auto base = elements(fr, ideal.min_generators());
    std::vector<SemigroupIdealSet> out;
    auto cur = base;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (k > 1) cur = sum_prune(cur, base);
        out.emplace_back(ideal.semigroup(), points_of(cur));
    }
    return out;
}

SemigroupIdealSet ideal_power(const SemigroupIdealSet& ideal, unsigned k) {
    if (k == 0) throw Error(ErrorKind::InvalidInput, "ideal power needs k ≥ 1");
    return ideal_powers(ideal, k).back();
}

// ---------------------------------------------------------------- counting

Rational complement_window(const SemigroupIdealSet& ideal) {
    // If m_r·r ∈ I for each extreme ray r and x = Σ λ_r r has ℓ(x) ≥ Σ m_r ℓ(r),
    // some λ_r ≥ m_r, so x ∈ m_r·r + S ⊆ I.
    const auto& s = ideal.semigroup();
    Rational bound = 0;
    for (const auto& r : s.cone().rays()) {
        std::optional<Rational> best;
        for (const auto& g : ideal.min_generators()) {
            if (g.is_zero()) return 0;
            if (rank(to_rational({g.coords, r.coords})) != 1) continue;
            std::size_t i = 0;
            while (r[i] == 0) ++i;
            const Rational m = make_rational(g[i], r[i]);
            if (!best || m < *best) best = m;
        }
        if (!best) throw Error(ErrorKind::NotPrimary, "an extreme ray of the cone carries no generator");
        bound += *best * s.ell()(r);
    }
    return bound;
}

std::vector<LatticePoint> complement_points(const SemigroupIdealSet& ideal) {
    const Rational bound = complement_window(ideal);
    Frame fr(ideal.semigroup());
    const auto gens = elements(fr, ideal.min_generators());
    std::vector<LatticePoint> out;
    for (const auto& p : window_points(ideal.semigroup(), fr, 0, bound)) {
        const bool in = std::any_of(gens.begin(), gens.end(), [&](const Element& g) { return geq(p.f, g.f); });
        if (!in) out.push_back(to_point(p.x));
    }
    return out;
}

Integer complement_count(const SemigroupIdealSet& ideal) {
    const auto& s = ideal.semigroup();
    const Rational bound = complement_window(ideal);
    if (bound == 0) return 0;
    Frame fr(s);
    const std::size_t n = s.dim();
    // A coordinate direction inside C lets each lattice line be counted in closed form.
    std::optional<std::size_t> axis;
    for (std::size_t j = 0; j < n && !axis; ++j) {
        bool inside = true;
        for (const auto& u : fr.normals) inside = inside && u[j] >= 0;
        if (inside) axis = j;
    }
    if (!axis) return Integer(static_cast<unsigned long>(complement_points(ideal).size()));

    const std::size_t j = *axis;
    Coords e(n, 0);
    e[j] = 1;
    const Coords a = fr.facet(e);
    const std::int64_t a_level = fr.ell[j];
    const auto gens = elements(fr, ideal.min_generators());
    auto [lo, hi] = window_box(s, bound);
    lo[j] = hi[j] = 0;
    const Rational bound_scaled = bound * fr.ell_scale;
    Integer total = 0;
    for_each_in_box(lo, hi, [&](const Coords& x) {
        const Coords f = fr.facet(x);
        // Along x + t·e_j: in C from t_c on; in the window below t_end.
        std::int64_t t_c = INT64_MIN;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (a[i] == 0) {
                if (f[i] < 0) return;
            } else {
                t_c = std::max(t_c, ceil_div(-f[i], a[i]));
            }
        }
        const Rational rest = (bound_scaled - fr.level(x)) / Rational(a_level);
        const std::int64_t t_end = to_int64(ceil(rest));
        std::int64_t t_in = t_end;
        for (const auto& g : gens) {
            std::int64_t t_g = INT64_MIN;
            bool reachable = true;
            for (std::size_t i = 0; i < f.size() && reachable; ++i) {
                const std::int64_t need = g.f[i] - f[i];
                if (a[i] == 0) {
                    reachable = need <= 0;
                } else {
                    t_g = std::max(t_g, ceil_div(need, a[i]));
                }
            }
            if (reachable) t_in = std::min(t_in, t_g);
        }
        const std::int64_t stop = std::min(t_end, t_in);
        if (stop > t_c) total += Integer(static_cast<long>(stop - t_c));
    });
    return total;
}

std::vector<LatticePoint> hilbert_basis(const LatticeSemigroup& s) {
    Frame fr(s);
    Rational top = 0;
    for (const auto& r : s.cone().rays()) top += s.ell()(r);
    std::vector<Element> pts = window_points(s, fr, 0, top + Rational(1, 1) / fr.ell_scale);
    std::vector<Element> irreducible;
    for (const auto& x : pts) {
        if (x.level == 0) continue;
        bool reducible = false;
        for (const auto& y : pts) {
            if (y.level == 0 || y.level >= x.level) continue;
            if (geq(x.f, y.f)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irreducible.push_back(x);
    }
    return points_of(irreducible);
}

Rational primary_certificate(const SemigroupIdealSet& ideal) {
    const auto& s = ideal.semigroup();
    Frame fr(s);
    const auto outside = complement_points(ideal);
    if (outside.empty()) return 1;
    // t1: every point of S at level ≥ t1 lies in I.
    Rational top = 0;
    for (const auto& p : outside) top = std::max(top, s.ell()(p));
    const Rational t1 = Rational(floor(top) + 1);
    // M1 = S ∩ {ℓ ≥ t1} is generated as a semigroup by its points below
    // 2·t1 + L, with L the top level of a Hilbert basis of S.
    Rational big_l = 0;
    for (const auto& h : hilbert_basis(s)) big_l = std::max(big_l, s.ell()(h));
    const auto gens = window_points(s, fr, t1, 2 * t1 + big_l);
    Rational t0_level = t1;
    for (const auto& g : gens) t0_level = std::max(t0_level, level_of(fr, g.level));
    return Rational(floor(t0_level) + 1);
}

NewtonRegion ideal_region(const SemigroupIdealSet& ideal) {
    return newton_region(ideal.semigroup().cone(), ideal.min_generators(), ideal.semigroup().ell());
}

// ---------------------------------------------------------------- sequences

namespace {

Rational prefix_t0(const std::vector<SemigroupIdealSet>& terms) {
    Rational t0 = 0;
    for (std::size_t k = 1; k <= terms.size(); ++k) {
        const auto& ideal = terms[k - 1];
        Rational top = -1;
        for (const auto& p : complement_points(ideal)) top = std::max(top, ideal.semigroup().ell()(p));
        const Rational need = top < 0 ? Rational(0) : Rational(floor(top) + 1);
        t0 = std::max(t0, Rational(need / static_cast<long>(k)));
    }
    return t0 == 0 ? Rational(1) : t0;
}

}  // namespace

PrimaryGradedSequence PrimaryGradedSequence::powers(SemigroupIdealSet ideal) {
    Rational t0 = primary_certificate(ideal);
    return PrimaryGradedSequence(Powers{std::move(ideal)}, std::move(t0));
}

PrimaryGradedSequence PrimaryGradedSequence::product(const PrimaryGradedSequence& a, const PrimaryGradedSequence& b) {
    if (!(a.semigroup() == b.semigroup())) throw Error(ErrorKind::ConeMismatch, "sequences live in different semigroups");
    Product p{std::make_shared<const PrimaryGradedSequence>(a), std::make_shared<const PrimaryGradedSequence>(b)};
    if (a.is_exact() && b.is_exact()) {
        // A product of power sequences is the power sequence of the product.
        Rational t0 = primary_certificate(ideal_sum(a.base(), b.base()));
        return PrimaryGradedSequence(std::move(p), std::move(t0));
    }
    const unsigned len = std::min(a.length().value_or(~0U), b.length().value_or(~0U));
    std::vector<SemigroupIdealSet> terms;
    for (unsigned k = 1; k <= len; ++k) terms.push_back(ideal_sum(a.term(k), b.term(k)));
    return PrimaryGradedSequence(std::move(p), prefix_t0(terms));
}

PrimaryGradedSequence PrimaryGradedSequence::prefix(std::vector<SemigroupIdealSet> terms) {
    if (terms.empty()) throw Error(ErrorKind::InvalidInput, "prefix needs at least one term");
    for (const auto& t : terms)
        if (!(t.semigroup() == terms.front().semigroup())) throw Error(ErrorKind::ConeMismatch, "terms live in different semigroups");
    for (std::size_t k = 1; k <= terms.size(); ++k)
        for (std::size_t m = k; k + m <= terms.size(); ++m)
            for (const auto& g : terms[k - 1].min_generators())
                for (const auto& h : terms[m - 1].min_generators())
                    if (!terms[k + m - 1].contains(g + h))
                        throw Error(ErrorKind::InvalidInput, "terms are not graded: I_" + std::to_string(k) + " + I_" +
                                                                 std::to_string(m) + " ⊄ I_" + std::to_string(k + m));
    Rational t0 = prefix_t0(terms);
    return PrimaryGradedSequence(Prefix{std::move(terms)}, std::move(t0));
}

const LatticeSemigroup& PrimaryGradedSequence::semigroup() const {
    return std::visit(
        [](const auto& k) -> const LatticeSemigroup& {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Powers>) {
                return k.ideal.semigroup();
            } else if constexpr (std::is_same_v<T, Product>) {
                return k.a->semigroup();
            } else {
                return k.terms.front().semigroup();
            }
        },
        kind_);
}

bool PrimaryGradedSequence::is_exact() const {
    if (std::holds_alternative<Powers>(kind_)) return true;
    if (const auto* p = std::get_if<Product>(&kind_)) return p->a->is_exact() && p->b->is_exact();
    return false;
}

std::optional<unsigned> PrimaryGradedSequence::length() const {
    if (const auto* p = std::get_if<Prefix>(&kind_)) return static_cast<unsigned>(p->terms.size());
    if (const auto* p = std::get_if<Product>(&kind_)) {
        auto la = p->a->length(), lb = p->b->length();
        if (!la) return lb;
        if (!lb) return la;
        return std::min(*la, *lb);
    }
    return std::nullopt;
}

SemigroupIdealSet PrimaryGradedSequence::base() const {
    if (const auto* p = std::get_if<Powers>(&kind_)) return p->ideal;
    const auto& prod = std::get<Product>(kind_);
    return ideal_sum(prod.a->base(), prod.b->base());
}

SemigroupIdealSet PrimaryGradedSequence::term(unsigned k) const {
    if (k == 0) throw Error(ErrorKind::InvalidInput, "sequence terms start at k = 1");
    if (is_exact()) return ideal_power(base(), k);
    if (auto len = length(); len && k > *len) throw Error(ErrorKind::InvalidInput, "term " + std::to_string(k) + " is not materialized");
    if (const auto* p = std::get_if<Prefix>(&kind_)) return p->terms[k - 1];
    const auto& prod = std::get<Product>(kind_);
    return ideal_sum(prod.a->term(k), prod.b->term(k));
}

std::vector<SemigroupIdealSet> PrimaryGradedSequence::terms(unsigned kmax) const {
    if (is_exact()) return ideal_powers(base(), kmax);
    std::vector<SemigroupIdealSet> out;
    for (unsigned k = 1; k <= kmax; ++k) out.push_back(term(k));
    return out;
}

std::vector<Integer> hilbert_samuel_sequence(const PrimaryGradedSequence& seq, unsigned kmax) {
    if (kmax == 0) throw Error(ErrorKind::InvalidInput, "kmax must be positive");
    std::vector<Integer> out;
    for (const auto& ideal : seq.terms(kmax)) out.push_back(complement_count(ideal));
    return out;
}

NewtonRegion gamma_region(const PrimaryGradedSequence& seq) {
    if (const auto* p = std::get_if<PrimaryGradedSequence::Powers>(&seq.kind())) return ideal_region(p->ideal);
    if (seq.is_exact()) {
        const auto& prod = std::get<PrimaryGradedSequence::Product>(seq.kind());
        return minkowski_sum(gamma_region(*prod.a), gamma_region(*prod.b));
    }
    const auto& s = seq.semigroup();
    std::set<RationalPoint> pts;
    const unsigned len = *seq.length();
    for (unsigned k = 1; k <= len; ++k) {
        const Rational inv(1, k);
        const auto term = seq.term(k);
        for (const auto& g : term.min_generators()) pts.insert(inv * RationalPoint(g));
    }
    return newton_region(s.cone(), std::vector<RationalPoint>(pts.begin(), pts.end()), s.ell());
}

SequenceMultiplicity multiplicity(const PrimaryGradedSequence& seq) {
    SequenceMultiplicity out{covol(gamma_region(seq)), seq.is_exact(), std::nullopt};
    if (!out.exact) {
        const unsigned m = *seq.length();
        const Integer h = complement_count(seq.term(m));
        out.trend = Rational(h) / Rational(pow(Integer(m), static_cast<unsigned>(seq.semigroup().dim())));
    }
    return out;
}

Rational mixed_multiplicity_semigroup(const std::vector<PrimaryGradedSequence>& seqs) {
    std::vector<NewtonRegion> regions;
    for (const auto& s : seqs) regions.push_back(gamma_region(s));
    if (regions.empty()) throw Error(ErrorKind::WrongArity, "mixed multiplicity needs n sequences");
    return Rational(factorial(static_cast<unsigned>(regions.front().dim()))) * mixed_covol(regions);
}

}  // namespace coconvex
