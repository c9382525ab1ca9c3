#include "coconvex/verify.hpp"

#include "coconvex/error.hpp"
#include "coconvex/inequalities.hpp"
#include "coconvex/polyfit.hpp"

#include <chrono>

namespace coconvex {

namespace {

InstanceSpec sub_spec(const InstanceSpec& spec, unsigned index, unsigned part) {
    InstanceSpec s = spec;
    s.seed = instance_seed(instance_seed(spec.seed, index), part);
    return s;
}

bool homothetic(unsigned index) { return index % 5 == 0; }
unsigned homothety(unsigned index) { return 2 + (index / 5) % 2; }

NewtonRegion random_region(const InstanceSpec& spec, unsigned index, unsigned part) {
    return ideal_region(random_semigroup_ideal(sub_spec(spec, index, part)));
}

Rational factorial_q(std::size_t n) { return Rational(factorial(static_cast<unsigned>(n))); }

Json compact(const NewtonRegion& r) {
    Json j = to_json(r);
    j.erase("facets");
    return j;
}

template <class F>
VerificationReport run(const std::string& name, const InstanceSpec& spec, unsigned count, F&& instance) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = name;
    rep.spec = spec;
    rep.count = count;
    for (unsigned i = 0; i < count; ++i) rep.instances.push_back(instance(i));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

Poly term_poly(std::size_t n, std::initializer_list<std::pair<long, std::vector<long>>> terms) {
    Poly f(n);
    for (const auto& [c, e] : terms) f.add_term(LatticePoint(IntVector(e.begin(), e.end())), Rational(c));
    return f;
}

}  // namespace

std::vector<unsigned> VerificationReport::violations() const {
    std::vector<unsigned> v;
    for (const auto& r : instances)
        if (r.violation) v.push_back(r.index);
    return v;
}

std::vector<unsigned> VerificationReport::equalities() const {
    std::vector<unsigned> v;
    for (const auto& r : instances)
        if (r.equality) v.push_back(r.index);
    return v;
}

Json to_json(const VerificationReport& r) {
    Json spec = {{"dim", r.spec.dim},
                 {"min_generators", r.spec.min_generators},
                 {"max_generators", r.spec.max_generators},
                 {"exponent_bound", r.spec.exponent_bound},
                 {"seed", r.spec.seed}};
    if (r.spec.rays) {
        Json rays = Json::array();
        for (const auto& ray : *r.spec.rays) rays.push_back(to_json(ray));
        spec["rays"] = rays;
    }
    Json inst = Json::array();
    for (const auto& i : r.instances) {
        Json c = {{"index", i.index}, {"equality", i.equality}, {"violation", i.violation}};
        for (const auto& [k, v] : i.certificate.items()) c[k] = v;
        inst.push_back(std::move(c));
    }
    return {{"suite", r.suite},
            {"spec", spec},
            {"count", r.count},
            {"violations", r.violations()},
            {"equalities", r.equalities()},
            {"instances", inst}};
}

VerificationReport suite_bm_covol(const InstanceSpec& spec, unsigned count) {
    const auto n = static_cast<unsigned>(spec.dim);
    return run("bm-covol", spec, count, [&](unsigned i) {
        const NewtonRegion g1 = random_region(spec, i, 0);
        const NewtonRegion g2 = homothetic(i) ? scale(g1, homothety(i)) : random_region(spec, i, 1);
        const Rational c1 = covol(g1), c2 = covol(g2), c12 = covol(minkowski_sum(g1, g2));
        const int s = compare_root_sum(c1, c2, c12, n);
        InstanceResult r{i, s == 0, s < 0 || (homothetic(i) && s != 0), {}};
        r.certificate = {{"homothetic", homothetic(i) ? Json(homothety(i)) : Json(nullptr)},
                         {"gamma1", compact(g1)},
                         {"gamma2", compact(g2)},
                         {"covol1", to_json(c1)},
                         {"covol2", to_json(c2)},
                         {"covol_sum", to_json(c12)},
                         {"sign", s}};
        return r;
    });
}

VerificationReport suite_af_covol(const InstanceSpec& spec, unsigned count) {
    const std::size_t n = spec.dim;
    if (n < 2) throw Error(ErrorKind::InvalidInput, "af-covol needs dimension at least 2");
    return run("af-covol", spec, count, [&](unsigned i) {
        const NewtonRegion g1 = random_region(spec, i, 0);
        const NewtonRegion g2 = homothetic(i) ? scale(g1, homothety(i)) : random_region(spec, i, 1);
        std::vector<NewtonRegion> rest;
        for (std::size_t j = 2; j < n; ++j) rest.push_back(random_region(spec, i, static_cast<unsigned>(j)));
        auto cv = [&](const NewtonRegion& a, const NewtonRegion& b) {
            std::vector<NewtonRegion> args{a, b};
            args.insert(args.end(), rest.begin(), rest.end());
            return mixed_covol(args);
        };
        const Rational x = cv(g1, g1), y = cv(g2, g2), z = cv(g1, g2);
        const int s = compare_product_square(x, y, z);
        InstanceResult r{i, s == 0, s < 0 || (homothetic(i) && s != 0), {}};
        Json others = Json::array();
        for (const auto& g : rest) others.push_back(compact(g));
        r.certificate = {{"homothetic", homothetic(i) ? Json(homothety(i)) : Json(nullptr)},
                         {"gamma1", compact(g1)},
                         {"gamma2", compact(g2)},
                         {"others", others},
                         {"cv11", to_json(x)},
                         {"cv22", to_json(y)},
                         {"cv12", to_json(z)},
                         {"sign", s}};
        return r;
    });
}

VerificationReport suite_bm_mult(const InstanceSpec& spec, unsigned count) {
    const auto n = static_cast<unsigned>(spec.dim);
    return run("bm-mult", spec, count, [&](unsigned i) {
        const MonomialIdealLocal a = random_monomial_ideal(sub_spec(spec, i, 0));
        const MonomialIdealLocal b = homothetic(i)
                                         ? MonomialIdealLocal(ideal_power(a.staircase(), homothety(i)), a.order())
                                         : random_monomial_ideal(sub_spec(spec, i, 1));
        const Integer ea = multiplicity(a), eb = multiplicity(b), eab = multiplicity(monomial_product(a, b));
        const int s = compare_root_sum(Rational(ea), Rational(eb), Rational(eab), n);
        InstanceResult r{i, s == 0, s < 0 || (homothetic(i) && s != 0), {}};
        r.certificate = {{"homothetic", homothetic(i) ? Json(homothety(i)) : Json(nullptr)},
                         {"a", to_json(a)},
                         {"b", to_json(b)},
                         {"e_a", to_json(ea)},
                         {"e_b", to_json(eb)},
                         {"e_ab", to_json(eab)},
                         {"sign", s}};
        return r;
    });
}

VerificationReport suite_polynomiality(const InstanceSpec& spec, unsigned count) {
    const std::size_t n = spec.dim;
    constexpr unsigned grid = 3;
    if (n > grid) throw Error(ErrorKind::InvalidInput, "polynomiality grid {0..3}² supports n ≤ 3");
    return run("polynomiality", spec, count, [&](unsigned i) {
        const SemigroupIdealSet i1 = random_semigroup_ideal(sub_spec(spec, i, 0));
        const SemigroupIdealSet i2 = homothetic(i) ? ideal_power(i1, homothety(i))
                                                   : random_semigroup_ideal(sub_spec(spec, i, 1));
        const auto p1 = ideal_powers(i1, grid), p2 = ideal_powers(i2, grid);
        const NewtonRegion g1 = ideal_region(i1), g2 = ideal_region(i2);

        // e(k1∗I1,• + k2∗I2,•): the sequence of powers of I1^{k1}·I2^{k2}.
        auto e_at = [&](unsigned k1, unsigned k2) -> Rational {
            if (k1 == 0 && k2 == 0) return 0;
            SemigroupIdealSet j = k1 ? p1[k1 - 1] : p2[k2 - 1];
            if (k1 && k2) j = ideal_sum(j, p2[k2 - 1]);
            return factorial_q(n) * multiplicity(PrimaryGradedSequence::powers(j)).value;
        };
        auto covol_at_grid = [&](unsigned l1, unsigned l2) -> Rational {
            if (l1 == 0 && l2 == 0) return 0;
            if (l1 == 0) return covol(scale(g2, l2));
            if (l2 == 0) return covol(scale(g1, l1));
            return covol(minkowski_sum(scale(g1, l1), scale(g2, l2)));
        };
        const HomogeneousFit fe = fit_homogeneous_grid(e_at, static_cast<unsigned>(n), grid);
        const HomogeneousFit fc = fit_homogeneous_grid(covol_at_grid, static_cast<unsigned>(n), grid);
        bool consistent = true;
        for (std::size_t k = 0; k < fe.coeffs.size(); ++k)
            consistent = consistent && fe.coeffs[k] == factorial_q(n) * fc.coeffs[k];

        InstanceResult r{i, false, !fe.exact || !fc.exact || !consistent, {}};
        Json ec = Json::array(), cc = Json::array();
        for (const auto& c : fe.coeffs) ec.push_back(to_json(c));
        for (const auto& c : fc.coeffs) cc.push_back(to_json(c));
        r.certificate = {{"homothetic", homothetic(i) ? Json(homothety(i)) : Json(nullptr)},
                         {"ideal1", to_json(i1)},
                         {"ideal2", to_json(i2)},
                         {"e_coeffs", ec},
                         {"e_exact", fe.exact},
                         {"covol_coeffs", cc},
                         {"covol_exact", fc.exact}};
        return r;
    });
}

std::vector<PolyLocalIdeal> lech_corpus(std::size_t n) {
    std::vector<PolyLocalIdeal> out;
    if (n == 2) {
        const TermOrder ord = TermOrder::standard(2);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {1, 0}}, {1, {0, 2}}}), term_poly(2, {{1, {0, 3}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {2, 0}}}), term_poly(2, {{1, {0, 2}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {1, 0}}}), term_poly(2, {{1, {0, 1}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {2, 0}}, {1, {0, 3}}}), term_poly(2, {{1, {0, 2}}, {-1, {3, 0}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {1, 1}}}), term_poly(2, {{1, {3, 0}}, {1, {0, 3}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {2, 0}}, {-1, {0, 3}}}), term_poly(2, {{1, {1, 2}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(2, {{1, {1, 0}}, {2, {1, 1}}, {-1, {0, 3}}}), term_poly(2, {{1, {0, 4}}, {3, {2, 1}}})},
                         TermOrder({1, 2}, {{1, 0}}));
    } else if (n == 3) {
        const TermOrder ord = TermOrder::standard(3);
        out.emplace_back(std::vector<Poly>{term_poly(3, {{1, {1, 0, 0}}}), term_poly(3, {{1, {0, 1, 0}}}), term_poly(3, {{1, {0, 0, 1}}})}, ord);
        out.emplace_back(std::vector<Poly>{term_poly(3, {{1, {1, 0, 0}}, {1, {0, 2, 0}}}), term_poly(3, {{1, {0, 1, 0}}, {1, {0, 0, 2}}}),
                                           term_poly(3, {{1, {0, 0, 3}}})},
                         ord);
        out.emplace_back(std::vector<Poly>{term_poly(3, {{1, {1, 0, 0}}, {1, {0, 1, 1}}}), term_poly(3, {{1, {0, 2, 0}}}),
                                           term_poly(3, {{1, {0, 0, 2}}})},
                         ord);
        out.emplace_back(std::vector<Poly>{term_poly(3, {{1, {2, 0, 0}}}), term_poly(3, {{1, {0, 2, 0}}, {-1, {1, 0, 1}}}),
                                           term_poly(3, {{1, {0, 0, 2}}, {1, {1, 1, 0}}})},
                         ord);
    }
    return out;
}

VerificationReport suite_lech(const InstanceSpec& spec, unsigned count) {
    const std::size_t n = spec.dim;
    const auto corpus = lech_corpus(n);
    // Enough powers for the Hilbert–Samuel fit in the plane; an upper bound in 3-space.
    const unsigned kmax = n == 2 ? 6 : 3;
    return run("lech", spec, count + static_cast<unsigned>(corpus.size()), [&](unsigned i) {
        InstanceResult r{i, false, false, {}};
        LechChain c;
        if (i < count) {
            const MonomialIdealLocal a = random_monomial_ideal(sub_spec(spec, i, 0));
            c = lech_chain(a);
            r.certificate = {{"kind", "monomial"}, {"ideal", to_json(a)}};
        } else {
            const PolyLocalIdeal& a = corpus[i - count];
            r.certificate = {{"kind", "polynomial"}, {"ideal", to_json(a)}, {"m0", a.m0()}};
            try {
                c = lech_chain(a, kmax);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::MonotonicityViolation) throw;
                r.violation = true;
                r.certificate["error"] = e.what();
                return r;
            }
        }
        r.violation = !c.holds;
        r.equality = c.e_in == c.bound;
        r.certificate["e_upper"] = to_json(c.e_upper);
        r.certificate["e_exact"] = c.e_exact;
        r.certificate["e_in"] = to_json(c.e_in);
        r.certificate["bound"] = to_json(c.bound);
        return r;
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bm-covol", "af-covol", "bm-mult", "polynomiality", "lech"};
    return names;
}

VerificationReport run_suite(const std::string& name, const InstanceSpec& spec, unsigned count) {
    if (name == "bm-covol") return suite_bm_covol(spec, count);
    if (name == "af-covol") return suite_af_covol(spec, count);
    if (name == "bm-mult") return suite_bm_mult(spec, count);
    if (name == "polynomiality") return suite_polynomiality(spec, count);
    if (name == "lech") return suite_lech(spec, count);
    throw Error(ErrorKind::InvalidInput, "unknown suite \"" + name + "\"");
}

}  // namespace coconvex
