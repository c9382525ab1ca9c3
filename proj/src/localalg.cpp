#include "coconvex/localalg.hpp"

#include "coconvex/error.hpp"
#include "coconvex/polyfit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace coconvex {

namespace {

using Exp = std::vector<std::int64_t>;

Exp to_exp(const LatticePoint& p) {
    Exp e(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) e[i] = to_int64(p[i]);
    return e;
}

LatticePoint to_point(const Exp& e) {
    IntVector c(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) c[i] = Integer(static_cast<long>(e[i]));
    return LatticePoint(std::move(c));
}

std::int64_t dot64(const std::vector<std::int64_t>& w, const Exp& e) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(w[i], e[i], &t) || __builtin_add_overflow(s, t, &s))
            throw Error(ErrorKind::Overflow, "exponent level exceeds 64 bits");
    }
    return s;
}

std::vector<std::int64_t> to_int64s(const IntVector& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_int64(x));
    return out;
}

// Every exponent with trunc(α) < level, numbered in increasing term order.
class MonomialIndex {
public:
    MonomialIndex(const TermOrder& ord, std::vector<std::int64_t> trunc, std::int64_t level)
        : trunc_(std::move(trunc)), level_(level), base_(level + 1) {
        const std::size_t n = ord.dim();
        std::int64_t bound = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (__builtin_mul_overflow(bound, base_, &bound))
                throw Error(ErrorKind::Overflow, "truncation level too large to index");

        Exp cur(n, 0);
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t used) {
            if (i == n) {
                exps_.push_back(cur);
                return;
            }
            for (std::int64_t a = 0; used + a * trunc_[i] < level_; ++a) {
                cur[i] = a;
                rec(i + 1, used + a * trunc_[i]);
            }
            cur[i] = 0;
        };
        if (level_ > 0) rec(0, 0);

        std::vector<std::vector<std::int64_t>> keys_of;
        keys_of.reserve(exps_.size());
        const auto w = to_int64s(ord.weights());
        std::vector<std::vector<std::int64_t>> tb;
        for (const auto& t : ord.tiebreak()) tb.push_back(to_int64s(t));
        for (const auto& e : exps_) {
            std::vector<std::int64_t> key{dot64(w, e)};
            for (const auto& t : tb) key.push_back(dot64(t, e));
            keys_of.push_back(std::move(key));
        }
        std::vector<std::size_t> perm(exps_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys_of[a] < keys_of[b]; });
        std::vector<Exp> sorted;
        sorted.reserve(perm.size());
        for (auto i : perm) sorted.push_back(exps_[i]);
        exps_ = std::move(sorted);
        for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(pack(exps_[i]), static_cast<int>(i));
    }

    std::size_t size() const { return exps_.size(); }
    const Exp& exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    std::int64_t trunc_level(const Exp& e) const { return dot64(trunc_, e); }
    std::int64_t level() const { return level_; }

    /// -1 when e is truncated away.
    int find(const Exp& e) const {
        if (trunc_level(e) >= level_) return -1;
        return index_.at(pack(e));
    }

private:
    std::uint64_t pack(const Exp& e) const {
        std::uint64_t k = 0;
        for (auto it = e.rbegin(); it != e.rend(); ++it) k = k * static_cast<std::uint64_t>(base_) + static_cast<std::uint64_t>(*it);
        return k;
    }

    std::vector<std::int64_t> trunc_;
    std::int64_t level_;
    std::int64_t base_;
    std::vector<Exp> exps_;
    std::unordered_map<std::uint64_t, int> index_;
};

// Sparse row with strictly increasing monomial indices; front() is the lowest term.
using Row = std::vector<std::pair<int, Rational>>;

struct SparsePoly {
    std::vector<std::pair<Exp, Rational>> terms;
    std::int64_t min_trunc = 0;
};

SparsePoly to_sparse(const Poly& f, const std::vector<std::int64_t>& trunc) {
    SparsePoly s;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        s.terms.emplace_back(to_exp(e), c);
        const auto t = dot64(trunc, s.terms.back().first);
        if (first || t < s.min_trunc) s.min_trunc = t;
        first = false;
    }
    return s;
}

Row multiply(const MonomialIndex& idx, const Exp& shift, const SparsePoly& g) {
    std::map<int, Rational> acc;
    Exp e(shift.size());
    for (const auto& [ge, c] : g.terms) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = shift[i] + ge[i];
        const int j = idx.find(e);
        if (j >= 0) acc[j] += c;
    }
    Row r;
    for (auto& [j, c] : acc)
        if (c != 0) r.emplace_back(j, std::move(c));
    return r;
}

Row multiply(const MonomialIndex& idx, const Row& b, const SparsePoly& g) {
    std::map<int, Rational> acc;
    Exp e;
    for (const auto& [bi, bc] : b) {
        const Exp& be = idx.exp(bi);
        e.resize(be.size());
        for (const auto& [ge, gc] : g.terms) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = be[i] + ge[i];
            const int j = idx.find(e);
            if (j >= 0) acc[j] += bc * gc;
        }
    }
    Row r;
    for (auto& [j, c] : acc)
        if (c != 0) r.emplace_back(j, std::move(c));
    return r;
}

// r - c·p for sorted rows.
Row axpy(const Row& r, const Rational& c, const Row& p) {
    Row out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -c * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Lowest-term echelon basis: distinct pivots, each row scaled to pivot coefficient 1.
class Echelon {
public:
    Row reduce(Row r) const {
        while (!r.empty()) {
            auto it = pivot_.find(r.front().first);
            if (it == pivot_.end()) break;
            const Rational c = r.front().second;
            r = axpy(r, c, rows_[it->second]);
        }
        return r;
    }

    void insert(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return;
        const Rational lead = r.front().second;
        if (lead != 1)
            for (auto& [j, c] : r) c /= lead;
        pivot_.emplace(r.front().first, rows_.size());
        rows_.push_back(std::move(r));
    }

    const std::vector<Row>& rows() const { return rows_; }
    std::vector<int> pivots() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_) p.push_back(r.front().first);
        std::sort(p.begin(), p.end());
        return p;
    }

private:
    std::vector<Row> rows_;
    std::unordered_map<int, std::size_t> pivot_;
};

// Echelon form of the truncated span of {x^α·g}.
Echelon span_of(const MonomialIndex& idx, const std::vector<SparsePoly>& gens) {
    Echelon ech;
    for (const auto& g : gens) {
        if (g.min_trunc >= idx.level()) continue;
        for (int i = 0; i < static_cast<int>(idx.size()); ++i) {
            const Exp& a = idx.exp(i);
            if (idx.trunc_level(a) + g.min_trunc >= idx.level()) continue;
            ech.insert(multiply(idx, a, g));
        }
    }
    return ech;
}

// Echelon forms of the truncated a, a², …, a^kmax; the truncated a^k is
// spanned by b·g with b running over a basis of the truncated a^{k-1}.
std::vector<Echelon> power_spans(const MonomialIndex& idx, const std::vector<SparsePoly>& gens, unsigned kmax) {
    std::vector<Echelon> out;
    out.push_back(span_of(idx, gens));
    for (unsigned k = 2; k <= kmax; ++k) {
        Echelon next;
        for (const auto& b : out.back().rows())
            for (const auto& g : gens) next.insert(multiply(idx, b, g));
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<SparsePoly> sparse_all(const std::vector<Poly>& gens, const std::vector<std::int64_t>& trunc) {
    std::vector<SparsePoly> out;
    for (const auto& g : gens) out.push_back(to_sparse(g, trunc));
    return out;
}

std::vector<std::int64_t> ones(std::size_t n) { return std::vector<std::int64_t>(n, 1); }

void check_gens(const std::vector<Poly>& gens, std::size_t n) {
    if (gens.empty()) throw Error(ErrorKind::InvalidInput, "an ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.dim() != n) throw Error(ErrorKind::InvalidInput, "generator dimension does not match the ring");
        if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "generators must be nonzero");
        if (g.terms().count(LatticePoint(IntVector(n, 0))))
            throw Error(ErrorKind::InvalidInput, "generators must lie in the maximal ideal");
    }
}

// Exponents with level ≤ ℓ(α) < level + max weight: generators of {ℓ ≥ level}.
std::vector<LatticePoint> level_boundary(const TermOrder& ord, std::int64_t level) {
    const auto w = to_int64s(ord.weights());
    const std::int64_t wmax = *std::max_element(w.begin(), w.end());
    const MonomialIndex idx(ord, w, level + wmax);
    std::vector<LatticePoint> out;
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
        if (idx.trunc_level(idx.exp(i)) >= level) out.push_back(to_point(idx.exp(i)));
    return out;
}

std::vector<LatticePoint> pivots_below(const MonomialIndex& idx, const Echelon& e, std::int64_t level) {
    std::vector<LatticePoint> out;
    for (int p : e.pivots())
        if (idx.trunc_level(idx.exp(p)) < level) out.push_back(to_point(idx.exp(p)));
    return out;
}

Integer checked_integer(const Rational& q, const char* what) {
    if (q.get_den() != 1) throw Error(ErrorKind::NotIntegral, std::string(what) + " is not an integer: " + to_string(q));
    return q.get_num();
}

}  // namespace

TermOrder::TermOrder(IntVector weights, std::vector<IntVector> tiebreak)
    : weights_(std::move(weights)), tiebreak_(std::move(tiebreak)) {
    const std::size_t n = weights_.size();
    if (n == 0) throw Error(ErrorKind::InvalidInput, "term order needs n ≥ 1");
    for (const auto& w : weights_)
        if (w <= 0) throw Error(ErrorKind::InvalidInput, "term order weights must be positive integers");
    if (tiebreak_.size() + 1 != n) throw Error(ErrorKind::InvalidInput, "term order needs n-1 tiebreak functionals");
    RatMatrix m;
    m.push_back(RatVector(weights_.begin(), weights_.end()));
    for (const auto& t : tiebreak_) {
        if (t.size() != n) throw Error(ErrorKind::InvalidInput, "tiebreak dimension does not match");
        m.push_back(RatVector(t.begin(), t.end()));
    }
    if (rank(m) != n) throw Error(ErrorKind::InvalidInput, "ℓ and the tiebreaks must have rank n");
}

TermOrder TermOrder::standard(std::size_t n) {
    std::vector<IntVector> tb;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        tb.push_back(std::move(e));
    }
    return TermOrder(IntVector(n, 1), std::move(tb));
}

Integer TermOrder::max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }

std::strong_ordering TermOrder::compare(const LatticePoint& a, const LatticePoint& b) const {
    const auto c = cmp(dot(weights_, a.coords), dot(weights_, b.coords));
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (const auto& t : tiebreak_) {
        const auto d = cmp(dot(t, a.coords), dot(t, b.coords));
        if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Poly Poly::monomial(const LatticePoint& exponent, const Rational& coeff) {
    Poly p(exponent.dim());
    p.add_term(exponent, coeff);
    return p;
}

void Poly::add_term(const LatticePoint& exponent, const Rational& coeff) {
    if (exponent.dim() != dim_) throw Error(ErrorKind::InvalidInput, "exponent dimension does not match");
    for (const auto& x : exponent.coords)
        if (x < 0) throw Error(ErrorKind::InvalidInput, "exponents must be nonnegative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Poly::coeff(const LatticePoint& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Poly operator*(const Rational& c, const Poly& a) {
    Poly r(a.dim_);
    for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
    return r;
}

LatticePoint valuation(const Poly& f, const TermOrder& ord) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "valuation of the zero polynomial");
    const LatticePoint* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || ord.less(e, *best)) best = &e;
    return *best;
}

unsigned mprimary_exponent(const std::vector<Poly>& gens, const TermOrder& ord, unsigned cap) {
    const std::size_t n = ord.dim();
    check_gens(gens, n);
    const auto sparse = sparse_all(gens, ones(n));
    for (unsigned d = 1; d <= cap; ++d) {
        const MonomialIndex idx(ord, ones(n), static_cast<std::int64_t>(d) + 1);
        const Echelon ech = span_of(idx, sparse);
        bool all = true;
        for (int i = 0; i < static_cast<int>(idx.size()) && all; ++i)
            if (idx.trunc_level(idx.exp(i)) == d) all = ech.reduce(Row{{i, Rational(1)}}).empty();
        if (all) return d;
    }
    throw Error(ErrorKind::NotPrimaryWithinCap, "no power m^d with d ≤ " + std::to_string(cap) + " lies in the ideal");
}

std::vector<LatticePoint> truncated_echelon(const std::vector<Poly>& gens, const TermOrder& ord, const Integer& level) {
    check_gens(gens, ord.dim());
    const auto w = to_int64s(ord.weights());
    const MonomialIndex idx(ord, w, to_int64(level));
    const Echelon ech = span_of(idx, sparse_all(gens, w));
    std::vector<LatticePoint> out;
    for (int p : ech.pivots()) out.push_back(to_point(idx.exp(p)));
    return out;
}

PolyLocalIdeal::PolyLocalIdeal(std::vector<Poly> gens, TermOrder order, std::nullptr_t)
    : gens_(std::move(gens)), order_(std::move(order)) {
    check_gens(gens_, order_.dim());
}

PolyLocalIdeal::PolyLocalIdeal(std::vector<Poly> gens, TermOrder order, unsigned cap)
    : PolyLocalIdeal(std::move(gens), std::move(order), nullptr) {
    m0_ = mprimary_exponent(gens_, order_, cap);
}

PolyLocalIdeal PolyLocalIdeal::with_certificate(std::vector<Poly> gens, TermOrder order, unsigned m0) {
    if (m0 == 0) throw Error(ErrorKind::InvalidInput, "m0 must be positive");
    PolyLocalIdeal a(std::move(gens), std::move(order), nullptr);
    a.m0_ = m0;
    return a;
}

PolyLocalIdeal ideal_product(const PolyLocalIdeal& a, const PolyLocalIdeal& b) {
    if (!(a.order() == b.order())) throw Error(ErrorKind::InvalidInput, "ideals use different term orders");
    std::vector<Poly> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) {
            Poly p = f * g;
            if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
        }
    return PolyLocalIdeal::with_certificate(std::move(gens), a.order(), a.m0() + b.m0());
}

LatticeSemigroup polynomial_semigroup(const TermOrder& order) {
    return LatticeSemigroup(orthant(order.dim()), order.ell());
}

MonomialIdealLocal::MonomialIdealLocal(const std::vector<LatticePoint>& exponents, TermOrder order)
    : MonomialIdealLocal(SemigroupIdealSet(polynomial_semigroup(order), exponents), order) {}

MonomialIdealLocal::MonomialIdealLocal(SemigroupIdealSet staircase, TermOrder order)
    : staircase_(std::move(staircase)), order_(std::move(order)) {
    if (!(staircase_.semigroup() == polynomial_semigroup(order_)))
        throw Error(ErrorKind::InvalidInput, "staircase does not live on the orthant graded by the order");
    if (!staircase_.is_m_primary()) throw Error(ErrorKind::NotPrimary, "monomial ideal is not m-primary");
}

MonomialIdealLocal monomial_product(const MonomialIdealLocal& a, const MonomialIdealLocal& b) {
    if (!(a.order() == b.order())) throw Error(ErrorKind::InvalidInput, "ideals use different term orders");
    return MonomialIdealLocal(ideal_sum(a.staircase(), b.staircase()), a.order());
}

PolyLocalIdeal as_poly_ideal(const MonomialIdealLocal& a) {
    std::vector<Poly> gens;
    for (const auto& g : a.staircase().min_generators()) gens.push_back(Poly::monomial(g));
    return PolyLocalIdeal(std::move(gens), a.order());
}

std::vector<SemigroupIdealSet> initial_ideals(const PolyLocalIdeal& a, unsigned kmax, EchelonOptions opts) {
    if (kmax == 0) throw Error(ErrorKind::InvalidInput, "kmax must be at least 1");
    const auto& ord = a.order();
    const auto w = to_int64s(ord.weights());
    const std::int64_t level = static_cast<std::int64_t>(kmax) * a.m0() * to_int64(ord.max_weight());
    const auto sparse = sparse_all(a.generators(), w);
    const MonomialIndex idx(ord, w, level);
    const auto spans = power_spans(idx, sparse, kmax);

    if (opts.regression_guard) {
        const MonomialIndex wider(ord, w, level + 1);
        const auto check = power_spans(wider, sparse, kmax);
        for (unsigned k = 0; k < kmax; ++k)
            if (pivots_below(idx, spans[k], level) != pivots_below(wider, check[k], level))
                throw std::logic_error("initial ideal changed when the truncation level was raised");
    }

    const auto boundary = level_boundary(ord, level);
    const auto s = polynomial_semigroup(ord);
    std::vector<SemigroupIdealSet> out;
    for (unsigned k = 0; k < kmax; ++k) {
        auto gens = pivots_below(idx, spans[k], level);
        gens.insert(gens.end(), boundary.begin(), boundary.end());
        out.emplace_back(s, gens);
    }
    return out;
}

SemigroupIdealSet initial_semigroup_ideal(const PolyLocalIdeal& a, unsigned k, EchelonOptions opts) {
    if (k == 0) throw Error(ErrorKind::InvalidInput, "k must be at least 1");
    // Truncate at exactly k·m0·max(ℓ); only the last span is needed.
    return initial_ideals(a, k, opts).back();
}

Integer colength(const PolyLocalIdeal& a) { return complement_count(initial_semigroup_ideal(a, 1)); }

Integer colength(const MonomialIdealLocal& a) { return complement_count(a.staircase()); }

std::vector<Integer> hilbert_samuel(const PolyLocalIdeal& a, unsigned kmax) {
    std::vector<Integer> h;
    for (const auto& i : initial_ideals(a, kmax)) h.push_back(complement_count(i));
    return h;
}

std::vector<Integer> hilbert_samuel(const MonomialIdealLocal& a, unsigned kmax) {
    std::vector<Integer> h;
    for (const auto& i : ideal_powers(a.staircase(), kmax)) h.push_back(complement_count(i));
    return h;
}

Integer staircase_multiplicity(const SemigroupIdealSet& staircase) {
    const Rational e = Rational(factorial(static_cast<unsigned>(staircase.dim()))) * covol(ideal_region(staircase));
    return checked_integer(e, "multiplicity");
}

Integer multiplicity(const MonomialIdealLocal& a) { return staircase_multiplicity(a.staircase()); }

MultiplicityReport multiplicity_report(const PolyLocalIdeal& a, unsigned kmax) {
    const auto n = static_cast<unsigned>(a.dim());
    MultiplicityReport rep;
    const auto ideals = initial_ideals(a, kmax);
    for (unsigned k = 1; k <= kmax; ++k) {
        const auto& in = ideals[k - 1];
        rep.e_initial.push_back(staircase_multiplicity(in));
        rep.u.push_back(Rational(rep.e_initial.back()) / Rational(pow(Integer(k), n)));
        rep.hilbert.push_back(complement_count(in));
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0 && rep.u[k - 1] > rep.u[d - 1])
                throw Error(ErrorKind::MonotonicityViolation, "e(in(a^k))/k^n at k = " + std::to_string(k) +
                                                                  " exceeds its value at the divisor " + std::to_string(d));
        if (k > 1 && rep.u[k - 1] > rep.u[k - 2]) rep.increases.push_back(k);
    }
    rep.upper = *std::min_element(rep.u.begin(), rep.u.end());
    // The fit needs n+3 values; it reuses the computed H and never extends them.
    if (kmax >= n + 3) {
        const auto h = [&](unsigned k) { return rep.hilbert.at(k - 1); };
        try {
            const auto fit = fit_eventually_polynomial(h, n, 1, kmax - n - 2);
            rep.fitted = Rational(factorial(n)) * fit.leading();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FitNotStabilized) throw;
        }
    }
    return rep;
}

Integer mixed_multiplicity(const std::vector<MonomialIdealLocal>& ideals) {
    if (ideals.empty()) throw Error(ErrorKind::WrongArity, "mixed multiplicity needs n ideals");
    std::vector<NewtonRegion> regions;
    for (const auto& a : ideals) {
        if (!(a.order() == ideals.front().order()))
            throw Error(ErrorKind::InvalidInput, "ideals use different term orders");
        regions.push_back(ideal_region(a.staircase()));
    }
    const auto n = static_cast<unsigned>(ideals.front().dim());
    return checked_integer(Rational(factorial(n)) * mixed_covol(regions), "mixed multiplicity");
}

BkReport bk_report(const std::vector<MonomialIdealLocal>& ideals) {
    BkReport r;
    r.number = mixed_multiplicity(ideals);
    const std::size_t n = ideals.front().dim();
    r.statement = "a system of " + std::to_string(n) + " generic members of the given ideals has intersection "
                  "multiplicity " + to_string(r.number) + " at the origin";
    return r;
}

LechChain lech_chain(const PolyLocalIdeal& a, unsigned kmax) {
    const auto n = static_cast<unsigned>(a.dim());
    LechChain c;
    const auto rep = multiplicity_report(a, kmax);
    c.e_in = rep.e_initial.front();
    c.bound = factorial(n) * rep.hilbert.front();
    if (rep.fitted) {
        c.e_upper = *rep.fitted;
        c.e_exact = true;
    } else {
        c.e_upper = rep.upper;
    }
    c.holds = c.e_upper <= Rational(c.e_in) && c.e_in <= c.bound;
    return c;
}

LechChain lech_chain(const MonomialIdealLocal& a) {
    const auto n = static_cast<unsigned>(a.dim());
    LechChain c;
    c.e_in = multiplicity(a);
    c.e_upper = Rational(c.e_in);
    c.e_exact = true;
    c.bound = factorial(n) * colength(a);
    c.holds = c.e_in <= c.bound;
    return c;
}

GoodValuationCertificate GoodValuationCertificate::for_order(const TermOrder& ord) {
    return {ord.ell(), Rational(ord.max_weight())};
}

bool GoodValuationCertificate::check(const Poly& f, unsigned k, const TermOrder& ord) const {
    if (ell(valuation(f, ord)) < Rational(k) * r0) return true;
    for (const auto& [e, c] : f.terms()) {
        Integer deg = 0;
        for (const auto& x : e.coords) deg += x;
        if (deg < k) return false;
    }
    return true;
}

GradedSubspaceSequence GradedSubspaceSequence::powers(PolyLocalIdeal a) {
    return GradedSubspaceSequence(std::make_shared<const PolyLocalIdeal>(std::move(a)));
}

GradedSubspaceSequence GradedSubspaceSequence::powers(const MonomialIdealLocal& a) {
    return powers(as_poly_ideal(a));
}

GradedSubspaceSequence GradedSubspaceSequence::product(const GradedSubspaceSequence& a, const GradedSubspaceSequence& b) {
    return powers(ideal_product(a.base(), b.base()));
}

}  // namespace coconvex
