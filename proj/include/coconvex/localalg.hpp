#pragma once

// m-primary ideals of Q[x_1..x_n] localized at the origin: lowest-term
// valuations, initial ideals by truncated echelon forms, colengths,
// Hilbert–Samuel functions and multiplicities.

#include "coconvex/semigroups.hpp"

#include <map>
#include <memory>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coconvex {

/// Compares ℓ first, then each tiebreak functional in turn; smaller is lower.
class TermOrder {
public:
    /// ℓ must have positive integer weights and, with the tiebreaks, rank n.
    TermOrder(IntVector weights, std::vector<IntVector> tiebreak);
    /// Standard degree with the tiebreaks e_1, …, e_{n-1}.
    static TermOrder standard(std::size_t n);

    std::size_t dim() const { return weights_.size(); }
    const IntVector& weights() const { return weights_; }
    const std::vector<IntVector>& tiebreak() const { return tiebreak_; }
    LinearFunctional ell() const { return LinearFunctional::from_integers(weights_); }
    Integer max_weight() const;
    Integer degree(const LatticePoint& a) const { return dot(weights_, a.coords); }

    std::strong_ordering compare(const LatticePoint& a, const LatticePoint& b) const;
    bool less(const LatticePoint& a, const LatticePoint& b) const { return compare(a, b) < 0; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    IntVector weights_;
    std::vector<IntVector> tiebreak_;
};

/// Finite sum of terms c·x^α with nonzero rational c and α ∈ Nⁿ.
class Poly {
public:
    explicit Poly(std::size_t n) : dim_(n) {}
    static Poly monomial(const LatticePoint& exponent, const Rational& coeff = 1);

    std::size_t dim() const { return dim_; }
    const std::map<LatticePoint, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Adds c·x^α; zero coefficients are never stored.
    void add_term(const LatticePoint& exponent, const Rational& coeff);
    Rational coeff(const LatticePoint& exponent) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::size_t dim_;
    std::map<LatticePoint, Rational> terms_;
};

/// The lowest exponent of f. Throws ZeroPolynomial.
LatticePoint valuation(const Poly& f, const TermOrder& ord);

/// Smallest d ≤ cap with every degree-d monomial in the span of {x^α·g}
/// modulo m^{d+1}; then m^d ⊆ a by Nakayama. Throws NotPrimaryWithinCap.
unsigned mprimary_exponent(const std::vector<Poly>& gens, const TermOrder& ord, unsigned cap = 64);

/// Pivots of the lowest-term echelon form of {x^α·g truncated to ℓ < D}:
/// exactly the values v(f), f ∈ (gens), with ℓ(v(f)) < D. Sorted by ord.
std::vector<LatticePoint> truncated_echelon(const std::vector<Poly>& gens, const TermOrder& ord, const Integer& level);

class PolyLocalIdeal {
public:
    /// Generators must be nonzero without constant term; m0 is computed.
    PolyLocalIdeal(std::vector<Poly> gens, TermOrder order, unsigned cap = 64);
    /// Skips the search when m^{m0} ⊆ a is already known, as for products.
    static PolyLocalIdeal with_certificate(std::vector<Poly> gens, TermOrder order, unsigned m0);

    std::size_t dim() const { return order_.dim(); }
    const std::vector<Poly>& generators() const { return gens_; }
    const TermOrder& order() const { return order_; }
    unsigned m0() const { return m0_; }

private:
    PolyLocalIdeal(std::vector<Poly> gens, TermOrder order, std::nullptr_t);

    std::vector<Poly> gens_;
    TermOrder order_;
    unsigned m0_ = 0;
};

PolyLocalIdeal ideal_product(const PolyLocalIdeal& a, const PolyLocalIdeal& b);

class MonomialIdealLocal {
public:
    /// Throws NotPrimary when some variable has no pure power in the ideal.
    MonomialIdealLocal(const std::vector<LatticePoint>& exponents, TermOrder order);
    /// The staircase must live on the orthant with ℓ equal to the order's.
    MonomialIdealLocal(SemigroupIdealSet staircase, TermOrder order);

    std::size_t dim() const { return staircase_.dim(); }
    const SemigroupIdealSet& staircase() const { return staircase_; }
    const TermOrder& order() const { return order_; }

private:
    SemigroupIdealSet staircase_;
    TermOrder order_;
};

MonomialIdealLocal monomial_product(const MonomialIdealLocal& a, const MonomialIdealLocal& b);
PolyLocalIdeal as_poly_ideal(const MonomialIdealLocal& a);
/// The orthant semigroup graded by the order's ℓ.
LatticeSemigroup polynomial_semigroup(const TermOrder& order);

/// Options for the initial-ideal engine.
struct EchelonOptions {
    /// Also recompute at D0 + 1 and require the same pivots below D0.
    bool regression_guard = false;
};

/// Staircase of in(a^k): echelon pivots at D0 = k·m0·max(ℓ) together with all
/// exponents of ℓ-level ≥ D0, which lie in m^{k·m0} ⊆ a^k.
SemigroupIdealSet initial_semigroup_ideal(const PolyLocalIdeal& a, unsigned k, EchelonOptions opts = {});
/// in(a), …, in(a^kmax).
std::vector<SemigroupIdealSet> initial_ideals(const PolyLocalIdeal& a, unsigned kmax, EchelonOptions opts = {});

Integer colength(const PolyLocalIdeal& a);
Integer colength(const MonomialIdealLocal& a);

std::vector<Integer> hilbert_samuel(const PolyLocalIdeal& a, unsigned kmax);
std::vector<Integer> hilbert_samuel(const MonomialIdealLocal& a, unsigned kmax);

/// n!·covol(Γ(a)); throws NotIntegral if that is not an integer.
Integer multiplicity(const MonomialIdealLocal& a);
/// n!·covol of the Newton region of a staircase.
Integer staircase_multiplicity(const SemigroupIdealSet& staircase);

struct MultiplicityReport {
    std::vector<Integer> e_initial;  // e(in(a^k)), k = 1..kmax
    std::vector<Rational> u;         // e(in(a^k)) / kⁿ, each ≥ e(a)
    std::vector<Integer> hilbert;    // H(k)
    /// k with u_k > u_{k-1}. Only u_{dk} ≤ u_k is guaranteed, since
    /// (1/k)Γ(in(a^k)) ⊆ (1/dk)Γ(in(a^{dk})); consecutive terms can increase,
    /// e.g. (x² - y³, xy²) has u_4 = 59/8 < u_5 = 186/25.
    std::vector<unsigned> increases;
    Rational upper;                  // min u_k ≥ e(a)
    std::optional<Rational> fitted;  // n!·(leading coefficient of H) when stabilized
};

/// Throws MonotonicityViolation if u_{dk} > u_k for some d, k with dk ≤ kmax.
MultiplicityReport multiplicity_report(const PolyLocalIdeal& a, unsigned kmax);

/// n!·CV(Γ(a_1), …, Γ(a_n)); throws NotIntegral.
Integer mixed_multiplicity(const std::vector<MonomialIdealLocal>& ideals);

struct BkReport {
    Integer number;
    std::string statement;
};

BkReport bk_report(const std::vector<MonomialIdealLocal>& ideals);

struct LechChain {
    Rational e_upper;  // best known value or upper bound for e(a)
    bool e_exact = false;
    Integer e_in;      // e(in(a))
    Integer bound;     // n!·colength(a)
    bool holds = false;
};

LechChain lech_chain(const PolyLocalIdeal& a, unsigned kmax = 4);
LechChain lech_chain(const MonomialIdealLocal& a);

/// ℓ(v(f)) ≥ k·r0 forces f ∈ m^k; for a weighted degree r0 = max weight.
struct GoodValuationCertificate {
    LinearFunctional ell;
    Rational r0;

    static GoodValuationCertificate for_order(const TermOrder& ord);
    /// Checks the implication on f for this k: false only on a counterexample.
    bool check(const Poly& f, unsigned k, const TermOrder& ord) const;
};

class GradedSubspaceSequence {
public:
    static GradedSubspaceSequence powers(PolyLocalIdeal a);
    static GradedSubspaceSequence powers(const MonomialIdealLocal& a);
    static GradedSubspaceSequence product(const GradedSubspaceSequence& a, const GradedSubspaceSequence& b);

    /// The ideal a_1; every term is a power of it.
    const PolyLocalIdeal& base() const { return *base_; }
    SemigroupIdealSet initial_term(unsigned k) const { return initial_semigroup_ideal(*base_, k); }

private:
    explicit GradedSubspaceSequence(std::shared_ptr<const PolyLocalIdeal> base) : base_(std::move(base)) {}
    std::shared_ptr<const PolyLocalIdeal> base_;
};

}  // namespace coconvex
