#include "coconvex/json_io.hpp"

#include "coconvex/error.hpp"

namespace coconvex {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) bad(std::string("field \"") + key + "\" must be an array");
    return a;
}

std::size_t dim_of(const Json& j) {
    const Json& d = field(j, "dim");
    if (!d.is_number_integer() || d.get<long>() < 1) bad("\"dim\" must be a positive integer");
    return static_cast<std::size_t>(d.get<long>());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1) bad("expected an integer, got " + to_string(q));
    return q.get_num();
}

IntVector int_vector_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) bad("expected an integer vector of length " + std::to_string(n));
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

LinearFunctional ell_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) bad("\"ell\" must have one entry per coordinate");
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return LinearFunctional(std::move(v));
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

Json to_json(const LatticePoint& p) {
    Json a = Json::array();
    for (const auto& x : p.coords) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(to_string(x));
    }
    return a;
}

Json to_json(const RationalPoint& p) {
    Json a = Json::array();
    for (const auto& x : p.coords) a.push_back(to_json(x));
    return a;
}

Json to_json(const Halfspace& h) { return {{"normal", to_json(LatticePoint(h.normal))}, {"offset", to_json(h.offset)}}; }

Json to_json(const RationalCone& c) {
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(to_json(r));
    return {{"rays", rays}};
}

Json to_json(const LinearFunctional& ell) { return to_json(RationalPoint(ell.coeffs())); }

Json to_json(const NewtonRegion& r) {
    Json gens = Json::array(), facets = Json::array();
    for (const auto& g : r.generators()) gens.push_back(to_json(g));
    for (const auto& f : r.facets()) facets.push_back(to_json(f));
    return {{"dim", r.dim()}, {"cone", to_json(r.cone())}, {"ell", to_json(r.ell())}, {"generators", gens}, {"facets", facets}};
}

Json to_json(const SemigroupIdealSet& i) {
    Json gens = Json::array();
    for (const auto& g : i.min_generators()) gens.push_back(to_json(g));
    return {{"dim", i.dim()}, {"cone", to_json(i.semigroup().cone())}, {"ell", to_json(i.semigroup().ell())}, {"generators", gens}};
}

Json to_json(const TermOrder& ord) {
    Json tb = Json::array();
    for (const auto& t : ord.tiebreak()) tb.push_back(to_json(LatticePoint(t)));
    return {{"ell", to_json(LatticePoint(ord.weights()))}, {"tiebreak", tb}};
}

Json to_json(const Poly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", to_json(c)}, {"exp", to_json(e)}});
    return {{"terms", terms}};
}

Json to_json(const MonomialIdealLocal& a) {
    Json mons = Json::array();
    for (const auto& g : a.staircase().min_generators()) mons.push_back(to_json(g));
    return {{"dim", a.dim()}, {"order", to_json(a.order())}, {"monomials", mons}};
}

Json to_json(const PolyLocalIdeal& a) {
    Json gens = Json::array();
    for (const auto& g : a.generators()) gens.push_back(to_json(g));
    return {{"dim", a.dim()}, {"order", to_json(a.order())}, {"generators", gens}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected a rational as a string \"p/q\" or an integer");
}

LatticePoint lattice_point_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("expected a nonempty integer vector");
    return LatticePoint(int_vector_from_json(j, j.size()));
}

RationalPoint rational_point_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("expected a nonempty rational vector");
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return RationalPoint(std::move(v));
}

RationalCone cone_from_json(const Json& j, std::size_t n) {
    if (j.is_null() || (j.is_string() && j.get<std::string>() == "orthant")) return orthant(n);
    std::vector<LatticePoint> rays;
    for (const auto& r : array_field(j, "rays")) rays.emplace_back(int_vector_from_json(r, n));
    return dual_description(rays);
}

TermOrder order_from_json(const Json& j, std::size_t n) {
    if (j.is_null()) return TermOrder::standard(n);
    IntVector w = int_vector_from_json(field(j, "ell"), n);
    std::vector<IntVector> tb;
    if (j.contains("tiebreak")) {
        for (const auto& t : array_field(j, "tiebreak")) tb.push_back(int_vector_from_json(t, n));
    } else {
        tb = TermOrder::standard(n).tiebreak();
    }
    return TermOrder(std::move(w), std::move(tb));
}

Poly poly_from_json(const Json& j, std::size_t n) {
    Poly f(n);
    for (const auto& t : array_field(j, "terms"))
        f.add_term(LatticePoint(int_vector_from_json(field(t, "exp"), n)), rational_from_json(field(t, "coeff")));
    return f;
}

NewtonRegion region_from_json(const Json& j) {
    const std::size_t n = dim_of(j);
    const RationalCone cone = cone_from_json(j.value("cone", Json()), n);
    const LinearFunctional ell = j.contains("ell") ? ell_from_json(j.at("ell"), n) : cone.default_functional();
    std::vector<RationalPoint> gens;
    for (const auto& g : array_field(j, "generators")) {
        auto p = rational_point_from_json(g);
        if (p.dim() != n) bad("generator dimension does not match \"dim\"");
        gens.push_back(std::move(p));
    }
    return newton_region(cone, gens, ell);
}

SemigroupIdealSet semigroup_ideal_from_json(const Json& j) {
    const std::size_t n = dim_of(j);
    RationalCone cone = cone_from_json(j.value("cone", Json()), n);
    const LatticeSemigroup s = j.contains("ell") ? LatticeSemigroup(cone, ell_from_json(j.at("ell"), n))
                                                 : LatticeSemigroup(cone);
    std::vector<LatticePoint> gens;
    for (const auto& g : array_field(j, "generators")) gens.emplace_back(int_vector_from_json(g, n));
    return SemigroupIdealSet(s, gens);
}

MonomialIdealLocal monomial_ideal_from_json(const Json& j) {
    const std::size_t n = dim_of(j);
    std::vector<LatticePoint> gens;
    for (const auto& g : array_field(j, "monomials")) gens.emplace_back(int_vector_from_json(g, n));
    return MonomialIdealLocal(gens, order_from_json(j.value("order", Json()), n));
}

PolyLocalIdeal poly_ideal_from_json(const Json& j) {
    const std::size_t n = dim_of(j);
    std::vector<Poly> gens;
    for (const auto& g : array_field(j, "generators")) gens.push_back(poly_from_json(g, n));
    const Json& cap = j.value("cap", Json(64));
    if (!cap.is_number_integer() || cap.get<long>() < 1) bad("\"cap\" must be a positive integer");
    return PolyLocalIdeal(std::move(gens), order_from_json(j.value("order", Json()), n), static_cast<unsigned>(cap.get<long>()));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace coconvex
