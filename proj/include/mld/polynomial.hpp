#ifndef MLD_POLYNOMIAL_HPP
#define MLD_POLYNOMIAL_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "mld/newton.hpp"

namespace mld {

// Extracts the support of a polynomial in variables x0..x{n}.
//
// Grammar: terms joined by '+'; a term is an optional integer coefficient
// and '*'-separated powers "xi^k" (k omitted means 1); whitespace ignored;
// '-' is rejected. Coefficients only matter through their presence; an
// explicit 0 coefficient is rejected as ambiguous. Duplicate monomials
// merge.
//
// The ambient dimension is max variable index + 1 unless `dimension` forces
// it; a variable index beyond a forced dimension is an inconsistent
// variable count. Errors carry line/column. The result still needs
// validate_support.
struct ParsedPolynomial {
    std::vector<Exponent> support;
    int dimension = 0;
};

ParsedPolynomial parse_polynomial(std::string_view text,
                                  std::optional<int> dimension = std::nullopt);

} // namespace mld

#endif
