#pragma once

// Seeded verification suites for the coconvex inequalities, polynomiality
// and the Lech chain. Violations are report data, never exceptions.

#include "coconvex/json_io.hpp"
#include "coconvex/random.hpp"

#include <string>
#include <vector>

namespace coconvex {

struct InstanceResult {
    unsigned index = 0;
    bool equality = false;
    bool violation = false;
    Json certificate;  // inputs and exact values
};

struct VerificationReport {
    std::string suite;
    InstanceSpec spec;
    unsigned count = 0;
    std::vector<InstanceResult> instances;  // sorted by index
    double seconds = 0;                     // wall time, kept out of the JSON

    std::vector<unsigned> violations() const;
    std::vector<unsigned> equalities() const;
};

/// Deterministic: equal specs and counts give byte-identical dumps.
Json to_json(const VerificationReport& r);

/// Every fifth instance (index ≡ 0 mod 5) pairs Γ with mΓ, m ∈ {2, 3}, and
/// must come out as an equality.
VerificationReport suite_bm_covol(const InstanceSpec& spec, unsigned count);
/// Γ_3, …, Γ_n are extra random regions shared by the three mixed covolumes.
VerificationReport suite_af_covol(const InstanceSpec& spec, unsigned count);
/// Monomial ideals; the homothetic partner of a is a^m.
VerificationReport suite_bm_mult(const InstanceSpec& spec, unsigned count);
/// Grid {0..3}² fits of e(k1∗I1 + k2∗I2) and covol(λ1Γ1 + λ2Γ2).
VerificationReport suite_polynomiality(const InstanceSpec& spec, unsigned count);
/// Random monomial ideals followed by the fixed polynomial corpus.
VerificationReport suite_lech(const InstanceSpec& spec, unsigned count);

/// bm-covol, af-covol, bm-mult, polynomiality, lech.
const std::vector<std::string>& suite_names();
/// Throws InvalidInput for an unknown name.
VerificationReport run_suite(const std::string& name, const InstanceSpec& spec, unsigned count);

/// Fixed m-primary polynomial ideals in dimension 2 or 3 (empty otherwise).
std::vector<PolyLocalIdeal> lech_corpus(std::size_t n);

}  // namespace coconvex
