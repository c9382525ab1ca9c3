#pragma once

// Exact polynomial interpolation for Hilbert–Samuel functions and the
// homogeneous grid fits of mixed-volume polynomials.

#include "coconvex/arith.hpp"

#include <functional>
#include <vector>

namespace coconvex {

/// Coefficients c_0..c_{m-1} of the unique polynomial of degree < m through
/// the m points (xs[i], ys[i]); the xs must be distinct.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x);

struct StabilizedFit {
    std::vector<Rational> coeffs;  // low degree first
    unsigned start = 0;            // fitted on start .. start + degree
    Rational leading() const { return coeffs.back(); }
};

/// Fits a degree-d polynomial through h(K..K+d) and accepts it when it also
/// predicts h(K+d+1) and h(K+d+2). K runs from `first` to `last_start`;
/// throws FitNotStabilized when no start is accepted.
StabilizedFit fit_eventually_polynomial(const std::function<Integer(unsigned)>& h, unsigned degree, unsigned first,
                                        unsigned last_start);

struct HomogeneousFit {
    std::vector<Rational> coeffs;  // coeffs[i] multiplies x^{d-i} y^i
    bool exact = false;            // zero residual at every grid point
};

/// Fits Σ coeffs[i] x^{d-i} y^i through f on the grid {0..g}², using the
/// points (1, 0..d) and checking all the others. Requires g ≥ d.
HomogeneousFit fit_homogeneous_grid(const std::function<Rational(unsigned, unsigned)>& f, unsigned degree, unsigned g);

Rational evaluate_homogeneous(const std::vector<Rational>& coeffs, const Rational& x, const Rational& y);

}  // namespace coconvex
