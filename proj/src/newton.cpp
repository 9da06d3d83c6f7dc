#include "mld/newton.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mld/errors.hpp"
#include "mld/lp.hpp"

namespace mld {

long Exponent::coordinate_sum() const {
    long sum = 0;
    for (long v : e) sum += v;
    return sum;
}

SupportSet SupportSet::validate(std::vector<Exponent> points, int dimension) {
    if (dimension <= 0) throw InputError("support: dimension must be positive");
    if (points.empty()) throw InputError("support: no monomials");
    for (const auto& p : points) {
        if (static_cast<int>(p.e.size()) != dimension)
            throw InputError("support: exponent vector length does not match dimension " +
                             std::to_string(dimension));
        for (long v : p.e)
            if (v < 0) throw InputError("support: negative exponent");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    for (const auto& p : points)
        if (p.coordinate_sum() == 0)
            throw InputError("support: unit: hypersurface misses the origin");

    // A common factor x_i puts the hyperplane {x_i = 0} inside X; the
    // highest dividing coordinate is the one named. For a lone monomial x^m
    // every positive coordinate divides; rejecting those outright would also
    // reject the monomial hyperplane powers k*e_i, whose germ is still
    // meaningful, so a lone monomial passes iff it has exactly one positive
    // coordinate.
    int divisible_coordinate = -1;
    for (int i = 0; i < dimension; ++i) {
        bool has_zero = false;
        for (const auto& p : points)
            if (p.e[i] == 0) {
                has_zero = true;
                break;
            }
        if (!has_zero) divisible_coordinate = i;
    }
    const bool lone_power = points.size() == 1 &&
                            points[0].coordinate_sum() ==
                                *std::max_element(points[0].e.begin(), points[0].e.end());
    if (divisible_coordinate >= 0 && !lone_power)
        throw InputError("support: divisible by coordinate " +
                         std::to_string(divisible_coordinate) +
                         ": X contains a coordinate hyperplane; divide it out and re-run");
    return SupportSet(std::move(points), dimension);
}

SupportSet validate_support(std::vector<Exponent> points, int dimension) {
    return SupportSet::validate(std::move(points), dimension);
}

Rational inner_product(const std::vector<Rational>& a, const Exponent& m) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * m.e[i];
    return sum;
}

Rational inner_product(const Covector& a, const Exponent& m) {
    return inner_product(to_rational_vector(a.w), m);
}

namespace {

void check_vector_arity(const SupportSet& s, std::size_t len, const char* what) {
    if (len != static_cast<std::size_t>(s.dimension()))
        throw InputError(std::string(what) + ": dimension mismatch");
}

void check_covector(const SupportSet& s, const Covector& a) {
    check_vector_arity(s, a.w.size(), "covector");
    for (long v : a.w)
        if (v < 1) throw InputError("covector: entries must be >= 1");
}

// Feasibility of q = sum(lambda_j p_j) + r with lambda >= 0 summing to one
// and r >= 0, i.e. q in conv(generators) + positive orthant. Eliminating r
// leaves sum(lambda_j p_j) <= q coordinatewise.
bool convex_cover_feasible(const std::vector<Exponent>& generators,
                           const std::vector<Rational>& q) {
    if (generators.empty()) return false;
    const std::size_t k = generators.size();
    LpProblem lp;
    lp.objective.assign(k, Rational(0));
    lp.lower_bounds.assign(k, Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::vector<Rational> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = generators[j].e[i];
        lp.add_constraint(std::move(row), Relation::LessEqual, q[i]);
    }
    lp.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::Equal, Rational(1));
    return simplex_solve(lp).status == LpStatus::Optimal;
}

} // namespace

Rational supporting_value(const SupportSet& s, const std::vector<Rational>& a) {
    check_vector_arity(s, a.size(), "supporting_value");
    for (const auto& v : a)
        if (v < 0) throw InputError("supporting_value: weights must be >= 0");
    Rational best = inner_product(a, s.points().front());
    for (std::size_t i = 1; i < s.points().size(); ++i)
        best = std::min(best, inner_product(a, s.points()[i]));
    return best;
}

Rational supporting_value(const SupportSet& s, const Covector& a) {
    check_covector(s, a);
    return supporting_value(s, to_rational_vector(a.w));
}

FaceTrace trace(const SupportSet& s, const Covector& a) {
    check_covector(s, a);
    const auto weights = to_rational_vector(a.w);
    FaceTrace t;
    t.witness = a;
    t.value = supporting_value(s, weights);
    for (const auto& m : s.points())
        if (inner_product(weights, m) == t.value) t.members.push_back(m);
    return t;
}

std::vector<Exponent> newton_vertices(const SupportSet& s) {
    std::vector<Exponent> vertices;
    for (std::size_t i = 0; i < s.points().size(); ++i) {
        std::vector<Exponent> others;
        others.reserve(s.points().size() - 1);
        for (std::size_t j = 0; j < s.points().size(); ++j)
            if (j != i) others.push_back(s.points()[j]);
        std::vector<Rational> q;
        q.reserve(s.dimension());
        for (long v : s.points()[i].e) q.emplace_back(v);
        if (!convex_cover_feasible(others, q)) vertices.push_back(s.points()[i]);
    }
    return vertices;
}

bool polyhedron_contains(const SupportSet& s, const std::vector<Rational>& q) {
    check_vector_arity(s, q.size(), "polyhedron_contains");
    return convex_cover_feasible(s.points(), q);
}

bool in_proper_cone(const SupportSet& s, const Covector& a) {
    const FaceTrace t = trace(s, a);
    const auto vertices = newton_vertices(s);
    std::set<Exponent> vertex_set(vertices.begin(), vertices.end());
    int on_face = 0;
    for (const auto& m : t.members)
        if (vertex_set.count(m)) ++on_face;
    return on_face >= 2;
}

} // namespace mld
