#include "coconvex/arith.hpp"

#include "coconvex/error.hpp"

#include <cctype>
#include <limits>

namespace coconvex {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::NotCobounded: return "NotCobounded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConeMismatch: return "ConeMismatch";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::NonpositiveScalar: return "NonpositiveScalar";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotPrimaryWithinCap: return "NotPrimaryWithinCap";
    case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorKind::FitNotStabilized: return "FitNotStabilized";
    case ErrorKind::NotIntegral: return "NotIntegral";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    return make_rational(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::optional<Rational> exact_root(const Rational& q, unsigned n) {
    if (q < 0) return std::nullopt;
    Integer num, den;
    if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n) == 0) return std::nullopt;
    return make_rational(num, den);
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return z.get_si();
}

std::vector<Integer> primitive(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

std::vector<Integer> integral_direction(const std::vector<Rational>& v) {
    Integer l = lcm_of_denominators(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Integer(x.get_num() * (l / x.get_den())));
    return primitive(std::move(out));
}

}  // namespace coconvex
