#pragma once

// JSON encoding of the library's objects. Rationals are strings ("p/q" or
// "p"); integers are numbers unless they exceed 64 bits, then strings.

#include "coconvex/localalg.hpp"

#include <json.hpp>

namespace coconvex {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const LatticePoint& p);
Json to_json(const RationalPoint& p);
Json to_json(const Halfspace& h);
Json to_json(const RationalCone& c);
Json to_json(const LinearFunctional& ell);
Json to_json(const NewtonRegion& r);
Json to_json(const SemigroupIdealSet& i);
Json to_json(const TermOrder& ord);
Json to_json(const Poly& f);
Json to_json(const MonomialIdealLocal& a);
Json to_json(const PolyLocalIdeal& a);

// Readers throw Error(InvalidInput) on malformed or ill-typed input.

/// A string "p/q" or an integer number.
Rational rational_from_json(const Json& j);
LatticePoint lattice_point_from_json(const Json& j);
RationalPoint rational_point_from_json(const Json& j);
/// "orthant", {"rays": [...]}, or absent (null) for the orthant of dimension n.
RationalCone cone_from_json(const Json& j, std::size_t n);
/// {"ell": [...], "tiebreak": [[...], ...]}; null gives the standard order.
TermOrder order_from_json(const Json& j, std::size_t n);
Poly poly_from_json(const Json& j, std::size_t n);

/// {"dim", "cone"?, "ell"?, "generators": [[...], ...]}
NewtonRegion region_from_json(const Json& j);
SemigroupIdealSet semigroup_ideal_from_json(const Json& j);
/// {"dim", "order"?, "monomials": [[...], ...]}
MonomialIdealLocal monomial_ideal_from_json(const Json& j);
/// {"dim", "order"?, "generators": [{"terms": [{"coeff", "exp"}, ...]}, ...], "cap"?}
PolyLocalIdeal poly_ideal_from_json(const Json& j);

/// Parses text; syntax errors become Error(InvalidInput).
Json parse_json(const std::string& text);

}  // namespace coconvex
