#ifndef MLD_DISCREPANCY_HPP
#define MLD_DISCREPANCY_HPP

#include <optional>
#include <vector>

#include "mld/lp.hpp"
#include "mld/newton.hpp"
#include "mld/oracle.hpp"
#include "mld/rational.hpp"

namespace mld {

// delta with 0 <= delta_i <= 1, encoding the boundary sum of coordinate
// hyperplanes with coefficients 1 - delta_i.
struct BoundaryCoefficients {
    std::vector<Rational> delta;

    static BoundaryCoefficients ones(int dimension);
    static BoundaryCoefficients of(std::vector<Rational> delta); // validates

    bool all_ones() const;
};

// Either minus infinity (the pair is not log canonical) or a finite
// non-negative rational.
class MldValue {
public:
    static MldValue minus_infinity() { return MldValue(); }
    static MldValue finite(Rational v);

    bool is_finite() const { return finite_; }
    const Rational& value() const; // throws std::logic_error when -inf

    bool operator==(const MldValue& other) const;

private:
    MldValue() = default;
    bool finite_ = false;
    Rational value_ = 0;
};

struct MldOutcome {
    MldValue mld = MldValue::minus_infinity();
    std::optional<Covector> witness;
    bool certified = false;
};

struct LctResult {
    Rational raw = 0;
    Rational capped = 0;
};

struct MldReport {
    bool log_canonical = false;
    MldValue mld = MldValue::minus_infinity();
    std::optional<Covector> witness;
    std::optional<FaceTrace> witness_trace;
    std::optional<bool> witness_in_proper_cone;
    std::optional<bool> witness_meets_strict_transform;
    long multiplicity = 0;
    Rational ordinary_blowup_discrepancy = 0;
    bool smooth = false;
    bool certified = false;

    // Present when the oracle cross-check was requested.
    std::optional<BoxSearchResult> oracle;
    std::optional<bool> oracle_agrees;
};

// phi(a) = (a, delta) - l_Gamma(a): the log discrepancy of the exceptional
// divisor of the a-weighted blow-up with respect to the pair.
Rational phi(const SupportSet& s, const BoundaryCoefficients& d, const Covector& a);

// True iff delta lies in the Newton polyhedron, i.e. phi >= 0 everywhere.
bool is_log_canonical(const SupportSet& s, const BoundaryCoefficients& d);

// Minimum of phi over strictly positive lattice covectors, or minus
// infinity. Runs the log-canonicity check first (the objective is unbounded
// below otherwise), then one integer program over the Newton vertices.
MldOutcome mld_pair(const SupportSet& s, const BoundaryCoefficients& d,
                    const IlpOptions& ilp = {});

// True iff the minimum of (a, m) over the full support is attained at two
// or more points, i.e. the a-weighted exceptional divisor meets the strict
// transform of the hypersurface.
bool intersects_strict_transform(const SupportSet& s, const Covector& a);

// Minimal total degree of the support.
long multiplicity(const SupportSet& s);

// n - (multiplicity - 1): the discrepancy of the ordinary blow-up of the
// origin, with n+1 the ambient dimension.
Rational ordinary_blowup_discrepancy(const SupportSet& s);

// Largest c with c * X log canonical against the reduced ambient pair:
// raw = 1 / min{ t : t*(1,..,1) in the Newton polyhedron }, one LP.
LctResult lct(const SupportSet& s);

struct ReportOptions {
    IlpOptions ilp;
    // Run brute_force_min with this box and cross-check; also lets the
    // report prefer a proper-cone witness among the oracle minimizers.
    std::optional<long> oracle_box;
    long max_enumeration = kDefaultEnumerationCeiling;
};

MldReport full_report(const SupportSet& s, const BoundaryCoefficients& d,
                      const ReportOptions& options = {});

} // namespace mld

#endif
