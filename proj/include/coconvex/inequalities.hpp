#pragma once

// Exact decisions for the coconvex Brunn–Minkowski and Alexandrov–Fenchel
// comparisons. No floating point is involved.

#include "coconvex/arith.hpp"

namespace coconvex {

/// Sign of a^{1/n} + b^{1/n} − c^{1/n} for nonnegative rationals, as -1, 0, 1.
int compare_root_sum(const Rational& a, const Rational& b, const Rational& c, unsigned n);

/// Sign of x·y − z².
int compare_product_square(const Rational& x, const Rational& y, const Rational& z);

}  // namespace coconvex
