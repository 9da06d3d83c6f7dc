#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mld/errors.hpp"
#include "mld/newton.hpp"

#include "corpus.hpp"

using namespace mld;

namespace {

SupportSet make(std::vector<std::vector<long>> rows) {
    std::vector<Exponent> points;
    int dim = static_cast<int>(rows.front().size());
    for (auto& r : rows) points.push_back(Exponent{std::move(r)});
    return validate_support(std::move(points), dim);
}

std::string error_text(std::vector<std::vector<long>> rows, int dim) {
    std::vector<Exponent> points;
    for (auto& r : rows) points.push_back(Exponent{std::move(r)});
    try {
        validate_support(std::move(points), dim);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("validation accepts the running examples") {
    CHECK(make({{2, 0}, {0, 3}}).points().size() == 2);
    CHECK(make({{1, 0, 0}}).dimension() == 3);
    CHECK(make({{2, 0}, {2, 0}, {0, 3}}).points().size() == 2); // duplicates merge
}

TEST_CASE("validation names the failure") {
    CHECK(error_text({}, 2).find("no monomials") != std::string::npos);
    CHECK(error_text({{0, 0}, {1, 0}}, 2).find("unit") != std::string::npos);
    CHECK(error_text({{1, 1}, {2, 1}}, 2).find("divisible by coordinate 1") != std::string::npos);
    CHECK(error_text({{1, 2}, {3, 1}}, 2).find("divisible by coordinate") != std::string::npos);
    CHECK(error_text({{1, 1}}, 2).find("divisible by coordinate") != std::string::npos);
    CHECK(error_text({{-1, 2}}, 2).find("negative") != std::string::npos);
    CHECK(error_text({{1, 0, 0}}, 2).find("does not match dimension") != std::string::npos);
    CHECK_THROWS_AS(validate_support({}, 0), InputError);
}

TEST_CASE("sorted immutable points") {
    SupportSet s = make({{0, 3}, {2, 0}});
    CHECK(std::is_sorted(s.points().begin(), s.points().end()));
}

TEST_CASE("supporting_value takes the minimum pairing") {
    CHECK(supporting_value(make({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}),
                           Covector{{1, 1, 1}}) == 2);
    CHECK(supporting_value(make({{2, 0}, {0, 3}}), Covector{{3, 2}}) == 6);
    CHECK(supporting_value(make({{1, 0}}), Covector{{7, 11}}) == 7);
    CHECK(supporting_value(make({{2, 0}, {0, 3}}),
                           std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)}) == 1);
    CHECK_THROWS_AS(supporting_value(make({{2, 0}}), Covector{{1, 1, 1}}), InputError);
}

TEST_CASE("trace collects the argmin face") {
    FaceTrace t = trace(make({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), Covector{{1, 1, 1}});
    CHECK(t.members == std::vector<Exponent>{Exponent{{2, 0, 0}}});
    CHECK(t.value == 2);

    t = trace(make({{2, 0}, {0, 3}}), Covector{{3, 2}});
    CHECK(t.members.size() == 2);
    CHECK(t.value == 6);

    t = trace(make({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}), Covector{{1, 1, 1}});
    CHECK(t.members.size() == 3);
    CHECK(t.witness == Covector{{1, 1, 1}});
}

TEST_CASE("trace is scale invariant") {
    std::mt19937 gen(411);
    auto corpus = mld_tests::random_corpus(411, 25);
    for (const auto& s : corpus) {
        Covector a = mld_tests::random_covector(gen, s.dimension(), 6);
        FaceTrace base = trace(s, a);
        for (long c : {2L, 3L, 5L}) {
            Covector scaled;
            for (long w : a.w) scaled.w.push_back(c * w);
            FaceTrace big = trace(s, scaled);
            CHECK(big.members == base.members);
            CHECK(big.value == Rational(c) * base.value);
        }
    }
}

TEST_CASE("newton_vertices drops dominated and interior points") {
    CHECK(newton_vertices(make({{2, 0}, {0, 3}})).size() == 2);
    CHECK(newton_vertices(make({{1, 0}, {2, 0}, {0, 3}})) ==
          std::vector<Exponent>{Exponent{{0, 3}}, Exponent{{1, 0}}});
    CHECK(newton_vertices(make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})) ==
          std::vector<Exponent>{
              Exponent{{0, 0, 2}}, Exponent{{0, 2, 0}}, Exponent{{2, 0, 0}}});
}

TEST_CASE("supporting_value agrees when restricted to the vertices") {
    std::mt19937 gen(550);
    auto corpus = mld_tests::random_corpus(550, 30);
    for (const auto& s : corpus) {
        auto vertices = newton_vertices(s);
        REQUIRE(!vertices.empty());
        for (int rep = 0; rep < 4; ++rep) {
            Covector a = mld_tests::random_covector(gen, s.dimension(), 9);
            Rational full = supporting_value(s, a);
            Rational restricted = inner_product(a, vertices.front());
            for (const auto& m : vertices)
                restricted = std::min(restricted, inner_product(a, m));
            CHECK(full == restricted);
        }
    }
}

TEST_CASE("polyhedron membership") {
    SupportSet s3 = make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK(polyhedron_contains(s3, std::vector<Rational>{1, 1, 1}));
    SupportSet s2 = make({{2, 0}, {0, 3}});
    CHECK(!polyhedron_contains(s2, std::vector<Rational>{1, 1}));
    for (const auto& m : s2.points())
        CHECK(polyhedron_contains(s2, to_rational_vector(m.e)));
    // Points above a support point stay inside; points below the hull fall out.
    CHECK(polyhedron_contains(s2, std::vector<Rational>{2, 5}));
    CHECK(!polyhedron_contains(s2, std::vector<Rational>{0, 0}));
}

TEST_CASE("proper cone position") {
    SupportSet s = make({{2, 0}, {0, 3}});
    CHECK(!in_proper_cone(s, Covector{{1, 1}}));
    CHECK(in_proper_cone(s, Covector{{3, 2}}));
    CHECK(in_proper_cone(make({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}), Covector{{1, 1, 1}}));
}

TEST_CASE("covector validation") {
    SupportSet s = make({{2, 0}, {0, 3}});
    CHECK_THROWS_AS(trace(s, Covector{{1, 0}}), InputError);
    CHECK_THROWS_AS(trace(s, Covector{{1}}), InputError);
    CHECK_THROWS_AS(supporting_value(s, std::vector<Rational>{-1, 1}), InputError);
}
