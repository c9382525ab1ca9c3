#pragma once

// Lattice semigroups S = C ∩ Zⁿ, their ideals stored by minimal generators,
// and primary graded sequences of such ideals.

#include "coconvex/regions.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace coconvex {

class LatticeSemigroup {
public:
    /// ℓ defaults to the sum of the facet normals of C.
    explicit LatticeSemigroup(RationalCone cone);
    LatticeSemigroup(RationalCone cone, LinearFunctional ell);

    const RationalCone& cone() const { return cone_; }
    const LinearFunctional& ell() const { return ell_; }
    std::size_t dim() const { return cone_.dim(); }
    bool contains(const LatticePoint& p) const { return cone_.contains(p); }

    friend bool operator==(const LatticeSemigroup& a, const LatticeSemigroup& b) {
        return a.cone_ == b.cone_ && a.ell_ == b.ell_;
    }

private:
    RationalCone cone_;
    LinearFunctional ell_;
};

/// I = ∪ (g + S) over an antichain of minimal generators.
class SemigroupIdealSet {
public:
    /// Generators must lie in S; dominated ones are dropped.
    SemigroupIdealSet(LatticeSemigroup semigroup, const std::vector<LatticePoint>& generators);

    const LatticeSemigroup& semigroup() const { return semigroup_; }
    const std::vector<LatticePoint>& min_generators() const { return generators_; }
    std::size_t dim() const { return semigroup_.dim(); }

    bool contains(const LatticePoint& p) const;
    /// S \ I is finite: every extreme ray of C carries a generator.
    bool is_m_primary() const;

    friend bool operator==(const SemigroupIdealSet& a, const SemigroupIdealSet& b) {
        return a.semigroup_ == b.semigroup_ && a.generators_ == b.generators_;
    }

private:
    LatticeSemigroup semigroup_;
    std::vector<LatticePoint> generators_;  // sorted by ℓ, then lexicographically
};

/// I + J; for powers of a single ideal this is the product of monomial ideals.
SemigroupIdealSet ideal_sum(const SemigroupIdealSet& a, const SemigroupIdealSet& b);
SemigroupIdealSet ideal_power(const SemigroupIdealSet& ideal, unsigned k);
/// I, 2∗I, …, kmax∗I built incrementally.
std::vector<SemigroupIdealSet> ideal_powers(const SemigroupIdealSet& ideal, unsigned kmax);

/// Level bound B with S \ I ⊆ {ℓ < B}. Throws NotPrimary.
Rational complement_window(const SemigroupIdealSet& ideal);
/// #(S \ I). Counts along lattice lines when C contains a coordinate vector,
/// otherwise point by point. Throws NotPrimary.
Integer complement_count(const SemigroupIdealSet& ideal);
/// The points of S \ I, tested one at a time; independent of the line counter.
std::vector<LatticePoint> complement_points(const SemigroupIdealSet& ideal);

/// Minimal generators of S, found as the irreducible elements below Σ ℓ(r).
std::vector<LatticePoint> hilbert_basis(const LatticeSemigroup& s);

/// Level t0 with (k∗I) ∩ {ℓ ≥ k·t0} = S ∩ {ℓ ≥ k·t0} for all k, following the
/// semigroup-generator argument. Returns 1 when I = S. Throws NotPrimary.
Rational primary_certificate(const SemigroupIdealSet& ideal);

SemigroupIdealSet whole_semigroup(const LatticeSemigroup& s);

class PrimaryGradedSequence {
public:
    struct Powers {
        SemigroupIdealSet ideal;
    };
    struct Product {
        std::shared_ptr<const PrimaryGradedSequence> a, b;
    };
    /// I_1, …, I_m given explicitly; only an inner approximation of Γ.
    struct Prefix {
        std::vector<SemigroupIdealSet> terms;
    };

    static PrimaryGradedSequence powers(SemigroupIdealSet ideal);
    static PrimaryGradedSequence product(const PrimaryGradedSequence& a, const PrimaryGradedSequence& b);
    static PrimaryGradedSequence prefix(std::vector<SemigroupIdealSet> terms);

    const LatticeSemigroup& semigroup() const;
    const LinearFunctional& ell() const { return semigroup().ell(); }
    const Rational& t0() const { return t0_; }
    bool is_exact() const;
    /// Number of materialized terms, or nullopt when every k is available.
    std::optional<unsigned> length() const;

    /// I_k for k ≥ 1.
    SemigroupIdealSet term(unsigned k) const;
    /// I_1..I_kmax, sharing work for power and product sequences.
    std::vector<SemigroupIdealSet> terms(unsigned kmax) const;

    const std::variant<Powers, Product, Prefix>& kind() const { return kind_; }

private:
    PrimaryGradedSequence(std::variant<Powers, Product, Prefix> kind, Rational t0)
        : kind_(std::move(kind)), t0_(std::move(t0)) {}
    /// For power and product sequences, the ideal whose powers they are.
    SemigroupIdealSet base() const;

    std::variant<Powers, Product, Prefix> kind_;
    Rational t0_;
};

std::vector<Integer> hilbert_samuel_sequence(const PrimaryGradedSequence& seq, unsigned kmax);

/// Γ(I_•). Exact for powers and products; for prefixes it is the hull of the
/// scaled generators of the materialized terms and is_exact() is false.
NewtonRegion gamma_region(const PrimaryGradedSequence& seq);

struct SequenceMultiplicity {
    Rational value;  // covol(Γ(I_•)), or the inner-approximation covolume
    bool exact = true;
    /// For prefixes: H(m)/mⁿ at the last materialized m.
    std::optional<Rational> trend;
};

SequenceMultiplicity multiplicity(const PrimaryGradedSequence& seq);

/// n!·CV(Γ(I_1,•), …, Γ(I_n,•)).
Rational mixed_multiplicity_semigroup(const std::vector<PrimaryGradedSequence>& seqs);

/// Newton region of a single ideal, conv(min_generators) + C.
NewtonRegion ideal_region(const SemigroupIdealSet& ideal);

}  // namespace coconvex
