#include <doctest.h>

#include <string>

#include "mld/errors.hpp"
#include "mld/polynomial.hpp"

using namespace mld;

namespace {

std::string error_text(std::string_view text, std::optional<int> dim = std::nullopt) {
    try {
        parse_polynomial(text, dim);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("plain two-variable polynomial") {
    ParsedPolynomial p = parse_polynomial("x0^2 + x1^3");
    CHECK(p.dimension == 2);
    CHECK(p.support == std::vector<Exponent>{Exponent{{0, 3}}, Exponent{{2, 0}}});
}

TEST_CASE("star-separated powers") {
    ParsedPolynomial p = parse_polynomial("x0*x1 + x0^2*x1");
    CHECK(p.dimension == 2);
    CHECK(p.support == std::vector<Exponent>{Exponent{{1, 1}}, Exponent{{2, 1}}});
}

TEST_CASE("duplicate monomials merge") {
    ParsedPolynomial p = parse_polynomial("3*x0^2 + x0^2", 2);
    CHECK(p.dimension == 2);
    CHECK(p.support == std::vector<Exponent>{Exponent{{2, 0}}});
    CHECK(parse_polynomial("3*x0^2 + x0^2").support == std::vector<Exponent>{Exponent{{2}}});
}

TEST_CASE("repeated variables in one term accumulate") {
    CHECK(parse_polynomial("x0*x0").support == std::vector<Exponent>{Exponent{{2}}});
    CHECK(parse_polynomial("x0^2*x0^3").support == std::vector<Exponent>{Exponent{{5}}});
}

TEST_CASE("dimension follows the highest index unless forced") {
    CHECK(parse_polynomial("x12").dimension == 13);
    CHECK(parse_polynomial("x1^2 + x0").support ==
          std::vector<Exponent>{Exponent{{0, 2}}, Exponent{{1, 0}}});
    ParsedPolynomial forced = parse_polynomial("x0", 3);
    CHECK(forced.dimension == 3);
    CHECK(forced.support == std::vector<Exponent>{Exponent{{1, 0, 0}}});
}

TEST_CASE("coefficients only matter through presence") {
    ParsedPolynomial p = parse_polynomial("7*x0^2 + 500000000000000000001*x1");
    CHECK(p.support == std::vector<Exponent>{Exponent{{0, 1}}, Exponent{{2, 0}}});
}

TEST_CASE("zero exponent parses; validation owns the rejection") {
    CHECK(parse_polynomial("x0^0 + x1", 2).support ==
          std::vector<Exponent>{Exponent{{0, 0}}, Exponent{{0, 1}}});
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_polynomial(" x0 ^ 2 \n + \t x1 ").support ==
          parse_polynomial("x0^2+x1").support);
}

TEST_CASE("rejections carry position and cause") {
    CHECK(error_text("").find("empty polynomial") != std::string::npos);
    CHECK(error_text("x0 +").find("trailing '+'") != std::string::npos);
    CHECK(error_text("+ x0").find("empty term") != std::string::npos);
    CHECK(error_text("x0 - x1").find("'-'") != std::string::npos);
    CHECK(error_text("0*x0 + x1").find("zero coefficient") != std::string::npos);
    CHECK(error_text("0*x0 + x1").find("line 1") != std::string::npos);
    CHECK(error_text("x^2").find("variable index") != std::string::npos);
    CHECK(error_text("x0^").find("exponent after '^'") != std::string::npos);
    CHECK(error_text("x0*").find("power after '*'") != std::string::npos);
    CHECK(error_text("x0 & x1").find("unexpected character '&'") != std::string::npos);
    CHECK(error_text("x0\n+ x1?").find("line 2") != std::string::npos);
    CHECK(error_text("x2", 2).find("inconsistent variable count") != std::string::npos);
    CHECK(error_text("x0", -1).find("dimension") != std::string::npos);
}
