#include "coconvex/inequalities.hpp"

#include "coconvex/error.hpp"

namespace coconvex {

namespace {

int sign(int c) { return (c > 0) - (c < 0); }

// Sign of (1 + s) − r^{1/n} where s = q^{1/n} is irrational. Then the two sides
// can never be equal: the minimal polynomial of s is x^d − s^d with d ≥ 2, so
// (1 + s)^n reduced in Q(s) has a positive coefficient on s and is irrational.
// Bisection on rational brackets of s therefore terminates.
int compare_irrational(const Rational& q, const Rational& r, unsigned n) {
    Rational lo = 0;
    Rational hi = 1;
    while (pow(hi, n) < q) hi *= 2;
    for (;;) {
        if (pow(1 + hi, n) < r) return -1;
        if (pow(1 + lo, n) > r) return 1;
        const Rational mid = (lo + hi) / 2;
        if (pow(mid, n) < q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

}  // namespace

int compare_root_sum(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
    if (a < 0 || b < 0 || c < 0) throw Error(ErrorKind::InvalidInput, "root comparison needs nonnegative values");
    if (a == 0) return sign(cmp(b, c));
    if (b == 0) return sign(cmp(a, c));
    // Divide through by a^{1/n}: compare 1 + (b/a)^{1/n} with (c/a)^{1/n}.
    const Rational q = b / a;
    const Rational r = c / a;
    if (auto s = exact_root(q, n)) return sign(cmp(pow(1 + *s, n), r));
    return compare_irrational(q, r, n);
}

int compare_product_square(const Rational& x, const Rational& y, const Rational& z) { return sign(cmp(x * y, z * z)); }

}  // namespace coconvex
