#include <doctest.h>

#include <vector>

#include "mld/discrepancy.hpp"
#include "mld/errors.hpp"
#include "mld/oracle.hpp"

using namespace mld;

namespace {

SupportSet make(std::vector<std::vector<long>> rows) {
    std::vector<Exponent> points;
    int dim = static_cast<int>(rows.front().size());
    for (auto& r : rows) points.push_back(Exponent{std::move(r)});
    return validate_support(std::move(points), dim);
}

} // namespace

TEST_CASE("cusp support over growing boxes") {
    SupportSet s = make({{2, 0}, {0, 3}});
    BoundaryCoefficients d = BoundaryCoefficients::ones(2);

    BoxSearchResult r5 = brute_force_min(s, d, 5);
    CHECK(r5.min_value == -1);
    CHECK(r5.minimizers == std::vector<Covector>{Covector{{3, 2}}, Covector{{4, 3}},
                                                 Covector{{5, 3}}, Covector{{5, 4}}});
    CHECK(!r5.interior);

    BoxSearchResult r6 = brute_force_min(s, d, 6);
    CHECK(r6.min_value == -2);
    CHECK(r6.minimizers == std::vector<Covector>{Covector{{6, 4}}});
    CHECK(!r6.interior);
}

TEST_CASE("interior minimum away from the box walls") {
    SupportSet s = make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    BoxSearchResult r = brute_force_min(s, BoundaryCoefficients::ones(3), 4);
    CHECK(r.min_value == 1);
    CHECK(r.minimizers == std::vector<Covector>{Covector{{1, 1, 1}}});
    CHECK(r.interior);
    CHECK(r.box_bound == 4);
}

TEST_CASE("fractional boundary coefficients") {
    SupportSet s = make({{1, 0}, {0, 1}});
    BoundaryCoefficients d =
        BoundaryCoefficients::of({Rational(1), make_rational(1, 2)});
    BoxSearchResult r = brute_force_min(s, d, 3);
    CHECK(r.min_value == make_rational(1, 2));
    CHECK(r.minimizers == std::vector<Covector>{Covector{{1, 1}}});
    CHECK(r.interior);
}

TEST_CASE("enumeration guard rails") {
    SupportSet s = make({{2, 0}, {0, 3}});
    BoundaryCoefficients d = BoundaryCoefficients::ones(2);
    CHECK_THROWS_AS(brute_force_min(s, d, 10, 50), EnumerationLimitError);
    CHECK_THROWS_AS(brute_force_min(s, d, 0), InputError);
    SupportSet s4 = make({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK_THROWS_AS(brute_force_min(s4, BoundaryCoefficients::ones(4), 100),
                    EnumerationLimitError);
}

TEST_CASE("oracle values match the direct formula") {
    SupportSet s = make({{3, 0}, {1, 1}, {0, 2}});
    BoundaryCoefficients d = BoundaryCoefficients::ones(2);
    BoxSearchResult r = brute_force_min(s, d, 4);
    for (const auto& a : r.minimizers) CHECK(phi(s, d, a) == r.min_value);
    Covector probe{{2, 3}};
    CHECK(phi(s, d, probe) >= r.min_value);
}
