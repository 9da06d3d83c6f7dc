#include "mld/rational.hpp"

#include <cctype>

#include "mld/errors.hpp"

namespace mld {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_token(std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer_token(den) || den[0] == '-')
            throw InputError("bad rational '" + std::string(text) + "': denominator must be a positive integer");
    }
    if (!is_integer_token(num))
        throw InputError("bad rational '" + std::string(text) + "': expected p or p/q");
    Integer n(std::string(num), 10);
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    return make_rational(n, d);
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

bool is_integral(const Rational& value) {
    return value.get_den() == 1;
}

Integer floor_int(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil_int(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rational fractional_part(const Rational& value) {
    return value - Rational(floor_int(value));
}

std::vector<Rational> to_rational_vector(const std::vector<long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace mld
