#include "coconvex/polyfit.hpp"

#include "coconvex/error.hpp"
#include "coconvex/linalg.hpp"

namespace coconvex {

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t m = xs.size();
    RatMatrix v(m, RatVector(m));
    for (std::size_t i = 0; i < m; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < m; ++j) {
            v[i][j] = p;
            p *= xs[i];
        }
    }
    auto c = solve(std::move(v), ys);
    if (!c) throw Error(ErrorKind::InvalidInput, "interpolation nodes must be distinct");
    return *c;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

StabilizedFit fit_eventually_polynomial(const std::function<Integer(unsigned)>& h, unsigned degree, unsigned first,
                                        unsigned last_start) {
    for (unsigned k = first; k <= last_start; ++k) {
        std::vector<Rational> xs, ys;
        for (unsigned j = 0; j <= degree; ++j) {
            xs.emplace_back(k + j);
            ys.emplace_back(h(k + j));
        }
        auto coeffs = interpolate(xs, ys);
        const unsigned a = k + degree + 1;
        if (evaluate(coeffs, Rational(a)) == Rational(h(a)) && evaluate(coeffs, Rational(a + 1)) == Rational(h(a + 1)))
            return StabilizedFit{std::move(coeffs), k};
    }
    throw Error(ErrorKind::FitNotStabilized, "no polynomial fit verified for starts up to " + std::to_string(last_start));
}

Rational evaluate_homogeneous(const std::vector<Rational>& coeffs, const Rational& x, const Rational& y) {
    const unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
    Rational s = 0;
    for (unsigned i = 0; i <= d; ++i) s += coeffs[i] * pow(x, d - i) * pow(y, i);
    return s;
}

HomogeneousFit fit_homogeneous_grid(const std::function<Rational(unsigned, unsigned)>& f, unsigned degree, unsigned g) {
    if (g < degree) throw Error(ErrorKind::InvalidInput, "grid too small for the degree");
    // On x = 1 the form is the ordinary polynomial Σ coeffs[i] y^i.
    std::vector<Rational> xs, ys;
    for (unsigned j = 0; j <= degree; ++j) {
        xs.emplace_back(j);
        ys.push_back(f(1, j));
    }
    HomogeneousFit fit{interpolate(xs, ys), true};
    for (unsigned x = 0; x <= g && fit.exact; ++x)
        for (unsigned y = 0; y <= g && fit.exact; ++y)
            fit.exact = evaluate_homogeneous(fit.coeffs, Rational(x), Rational(y)) == f(x, y);
    return fit;
}

}  // namespace coconvex
