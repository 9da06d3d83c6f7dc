#ifndef MLD_NEWTON_HPP
#define MLD_NEWTON_HPP

#include <string>
#include <vector>

#include "mld/rational.hpp"

namespace mld {

// Exponent vector of one monomial; length is the ambient dimension n+1,
// entries are non-negative. Coordinates are 0-indexed throughout.
struct Exponent {
    std::vector<long> e;

    long coordinate_sum() const;
    bool operator==(const Exponent& other) const = default;
    bool operator<(const Exponent& other) const { return e < other.e; }
};

// Strictly positive integer weight vector, a lattice covector in the
// interior of the standard cone.
struct Covector {
    std::vector<long> w;

    bool operator==(const Covector& other) const = default;
    bool operator<(const Covector& other) const { return w < other.w; }
};

// The support of f. Validated on construction: non-empty, no duplicates,
// no zero exponent, and every coordinate vanishes on some point (a lone
// monomial k*e_i is exempt). Immutable afterwards; points are kept sorted.
class SupportSet {
public:
    int dimension() const { return dimension_; }
    const std::vector<Exponent>& points() const { return points_; }

    static SupportSet validate(std::vector<Exponent> points, int dimension);

private:
    SupportSet(std::vector<Exponent> points, int dimension)
        : points_(std::move(points)), dimension_(dimension) {}

    std::vector<Exponent> points_;
    int dimension_ = 0;
};

// Checked constructor; rejects invalid input with a specific diagnosis.
SupportSet validate_support(std::vector<Exponent> points, int dimension);

// The compact face picked out by a covector: the argmin set of the pairing
// over the support, its witness, and the attained minimum.
struct FaceTrace {
    std::vector<Exponent> members;
    Covector witness;
    Rational value = 0;
};

Rational inner_product(const std::vector<Rational>& a, const Exponent& m);
Rational inner_product(const Covector& a, const Exponent& m);

// min over the support of (a, m), for a >= 0. Equals the minimum over
// newton_vertices alone.
Rational supporting_value(const SupportSet& s, const std::vector<Rational>& a);
Rational supporting_value(const SupportSet& s, const Covector& a);

FaceTrace trace(const SupportSet& s, const Covector& a);

// Support points that are vertices of the Newton polyhedron. A point is a
// non-vertex exactly when it is a convex combination of the other points
// plus a non-negative residual; decided by LP feasibility.
std::vector<Exponent> newton_vertices(const SupportSet& s);

// q in conv(support) + positive orthant, by the same LP feasibility.
bool polyhedron_contains(const SupportSet& s, const std::vector<Rational>& q);

// True iff the trace of a carries at least two Newton vertices, i.e. a lies
// in a cone of the dual fan that is not maximal dimensional.
bool in_proper_cone(const SupportSet& s, const Covector& a);

} // namespace mld

#endif
