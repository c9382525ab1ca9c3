#include "cli.hpp"

#include "coconvex/error.hpp"
#include "coconvex/json_io.hpp"
#include "coconvex/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace coconvex {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    unsigned kmax = 6;
    unsigned k = 1;
    std::string suite;
    unsigned count = 100;
    std::uint64_t seed = 0;
    std::size_t dim = 2;
    long bound = 0;
    unsigned min_gens = 3;
    unsigned max_gens = 6;
};

struct Result {
    Json body;
    int code = 0;
    std::string table_extra = {};
};

Json read_input(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::InvalidInput, "--input is required");
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

bool is_monomial(const Json& j) { return j.is_object() && j.contains("monomials"); }

// Polynomial ideals list generators as {"terms": ...}; regions and semigroup
// ideals list plain vectors.
bool is_polynomial(const Json& j) {
    return j.is_object() && j.contains("generators") && j.at("generators").is_array() &&
           !j.at("generators").empty() && j.at("generators").front().is_object();
}

Json lattice_list(const std::vector<LatticePoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

template <class T>
Json json_list(const std::vector<T>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

Json chain_json(const LechChain& c) {
    return {{"e_upper", to_json(c.e_upper)},
            {"e_exact", c.e_exact},
            {"e_in", to_json(c.e_in)},
            {"bound", to_json(c.bound)},
            {"holds", c.holds}};
}

Result cmd_multiplicity(const Options& o) {
    const Json j = read_input(o.input);
    if (is_monomial(j)) return {{{"e", to_json(multiplicity(monomial_ideal_from_json(j)))}}};
    if (is_polynomial(j)) {
        const auto rep = multiplicity_report(poly_ideal_from_json(j), o.kmax);
        return {{{"e_upper", to_json(rep.upper)},
                 {"e_fitted", rep.fitted ? to_json(*rep.fitted) : Json(nullptr)},
                 {"e_initial", json_list(rep.e_initial)},
                 {"u", json_list(rep.u)},
                 {"increases", rep.increases},
                 {"hilbert", json_list(rep.hilbert)}}};
    }
    const auto seq = PrimaryGradedSequence::powers(semigroup_ideal_from_json(j));
    const auto m = multiplicity(seq);
    const Rational e = Rational(factorial(static_cast<unsigned>(seq.semigroup().dim()))) * m.value;
    return {{{"covolume", to_json(m.value)}, {"e", to_json(e)}}};
}

Result cmd_covolume(const Options& o) {
    const NewtonRegion r = region_from_json(read_input(o.input));
    return {{{"covolume", to_json(covol(r))}, {"threshold", to_json(r.threshold())}}};
}

Result cmd_newton(const Options& o) {
    const Json j = read_input(o.input);
    const NewtonRegion r = is_monomial(j) ? ideal_region(monomial_ideal_from_json(j).staircase()) : region_from_json(j);
    Json diagram = Json::array();
    for (const auto& face : newton_diagram(r)) diagram.push_back(json_list(face.vertices));
    return {{{"vertices", json_list(r.generators())},
             {"facets", json_list(r.facets())},
             {"diagram", diagram},
             {"covolume", to_json(covol(r))}}};
}

Result cmd_mixed(const Options& o) {
    const Json j = read_input(o.input);
    if (j.is_object() && j.contains("ideals")) {
        std::vector<MonomialIdealLocal> ideals;
        for (const auto& a : j.at("ideals")) ideals.push_back(monomial_ideal_from_json(a));
        return {{{"mixed_multiplicity", to_json(mixed_multiplicity(ideals))}}};
    }
    if (!j.is_object() || !j.contains("regions") || !j.at("regions").is_array())
        throw Error(ErrorKind::InvalidInput, "expected \"regions\" or \"ideals\"");
    std::vector<NewtonRegion> regions;
    for (const auto& r : j.at("regions")) regions.push_back(region_from_json(r));
    return {{{"mixed_covolume", to_json(mixed_covol(regions))}}};
}

Result cmd_hilbert_samuel(const Options& o) {
    const Json j = read_input(o.input);
    const auto h = is_monomial(j) ? hilbert_samuel(monomial_ideal_from_json(j), o.kmax)
                                  : hilbert_samuel(poly_ideal_from_json(j), o.kmax);
    return {{{"H", json_list(h)}}};
}

Result cmd_initial_ideal(const Options& o) {
    const Json j = read_input(o.input);
    const PolyLocalIdeal a = is_monomial(j) ? as_poly_ideal(monomial_ideal_from_json(j)) : poly_ideal_from_json(j);
    const auto in = initial_semigroup_ideal(a, o.k);
    return {{{"k", o.k},
             {"m0", a.m0()},
             {"generators", lattice_list(in.min_generators())},
             {"colength", to_json(complement_count(in))},
             {"e_initial", to_json(staircase_multiplicity(in))}}};
}

Result cmd_lech(const Options& o) {
    const Json j = read_input(o.input);
    const LechChain c = is_monomial(j) ? lech_chain(monomial_ideal_from_json(j)) : lech_chain(poly_ideal_from_json(j), o.kmax);
    return {chain_json(c), c.holds ? 0 : 1};
}

Result cmd_bk(const Options& o) {
    const Json j = read_input(o.input);
    if (!j.is_object() || !j.contains("ideals") || !j.at("ideals").is_array())
        throw Error(ErrorKind::InvalidInput, "expected \"ideals\"");
    std::vector<MonomialIdealLocal> ideals;
    for (const auto& a : j.at("ideals")) ideals.push_back(monomial_ideal_from_json(a));
    const BkReport r = bk_report(ideals);
    return {{{"number", to_json(r.number)}, {"statement", r.statement}}};
}

Result cmd_verify(const Options& o) {
    InstanceSpec spec;
    spec.dim = o.dim;
    spec.seed = o.seed;
    spec.min_generators = o.min_gens;
    spec.max_generators = o.max_gens;
    spec.exponent_bound = o.bound > 0 ? o.bound : (o.dim <= 2 ? 8 : 4);
    const auto rep = run_suite(o.suite, spec, o.count);
    std::ostringstream extra;
    extra << "seconds: " << rep.seconds << "\n";
    return {to_json(rep), rep.violations().empty() ? 0 : 1, extra.str()};
}

std::string render(const Result& r, const std::string& format) {
    if (format == "json") return r.body.dump(2) + "\n";
    std::ostringstream os;
    for (const auto& [key, value] : r.body.items()) {
        if (key == "instances") {
            os << "instances: " << value.size() << "\n";
            continue;
        }
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    os << r.table_extra;
    return os.str();
}

std::filesystem::path output_path(const std::string& requested) {
    std::filesystem::path p(requested);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("COCONVEX_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact covolumes, multiplicities and coconvex inequalities", "coconvex"};
    app.require_subcommand(1);
    Options o;

    using Handler = Result (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output", o.output, "write here instead of stdout; relative paths use COCONVEX_OUTPUT_DIR");
        commands.emplace_back(sub, h);
        return sub;
    };
    auto with_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "JSON input file")->required(); };

    CLI::App* sub = add("multiplicity", "e(a) of a monomial ideal, report for a polynomial ideal", cmd_multiplicity);
    sub->add_option("--kmax", o.kmax, "powers used for polynomial ideals");
    with_input(sub);
    with_input(add("covolume", "covolume of a cobounded region", cmd_covolume));
    with_input(add("newton", "Newton region, facets and diagram", cmd_newton));
    with_input(add("mixed", "mixed covolume of regions or mixed multiplicity of monomial ideals", cmd_mixed));
    sub = add("hilbert-samuel", "H(1..kmax)", cmd_hilbert_samuel);
    sub->add_option("--kmax", o.kmax);
    with_input(sub);
    sub = add("initial-ideal", "staircase of in(a^k)", cmd_initial_ideal);
    sub->add_option("--k", o.k);
    with_input(sub);
    sub = add("lech", "e(a) ≤ e(in(a)) ≤ n!·colength(a)", cmd_lech);
    sub->add_option("--kmax", o.kmax);
    with_input(sub);
    with_input(add("bk", "local Bernstein–Kushnirenko number", cmd_bk));
    CLI::App* verify = add("verify", "run a seeded verification suite", cmd_verify);
    verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--count", o.count);
    verify->add_option("--seed", o.seed);
    verify->add_option("--dim", o.dim)->check(CLI::Range(1, 6));
    verify->add_option("--bound", o.bound, "exponent bound (default 8 for n ≤ 2, else 4)");
    verify->add_option("--min-gens", o.min_gens);
    verify->add_option("--max-gens", o.max_gens);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Result r;
        for (const auto& [sub, handler] : commands)
            if (sub->parsed()) r = handler(o);
        const std::string text = render(r, o.format);
        if (o.output.empty()) {
            out << text;
        } else {
            const auto path = output_path(o.output);
            std::ofstream f(path);
            if (!f || !(f << text)) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
        }
        return r.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        err << "error: InvalidInput: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace coconvex
