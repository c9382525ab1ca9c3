#pragma once

// Exact scalars. Integer and Rational are GMP's C++ classes; every Rational
// produced by this library is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coconvex {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
/// Throws Error(InvalidInput) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Exact nth root of a nonnegative rational, if it is itself rational.
std::optional<Rational> exact_root(const Rational& q, unsigned n);

/// Checked narrowing for hot loops; throws Error(Overflow) when out of range.
std::int64_t to_int64(const Integer& z);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
std::vector<Integer> primitive(std::vector<Integer> v);

/// Clears denominators: the smallest positive integer multiple that is integral,
/// then made primitive. Direction (and sign) is preserved.
std::vector<Integer> integral_direction(const std::vector<Rational>& v);

Integer lcm_of_denominators(const std::vector<Rational>& v);

}  // namespace coconvex
