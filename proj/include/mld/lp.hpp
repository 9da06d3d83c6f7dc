#ifndef MLD_LP_HPP
#define MLD_LP_HPP

#include <optional>
#include <vector>

#include "mld/rational.hpp"

namespace mld {

enum class Relation { GreaterEqual, LessEqual, Equal };

struct LpConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::GreaterEqual;
    Rational rhs = 0;
};

// Minimization problem. lower_bounds[j] absent means variable j is free.
struct LpProblem {
    std::vector<Rational> objective;
    std::vector<LpConstraint> constraints;
    std::vector<std::optional<Rational>> lower_bounds;
    std::vector<bool> integral;

    std::size_t num_vars() const { return objective.size(); }

    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Proof of optimality: the final basis (standard-form column ids, one per
// surviving row) and one dual multiplier per original constraint. Checked
// internally on every solve; check_certificate re-runs the check.
struct LpCertificate {
    std::vector<int> basis;
    std::vector<Rational> duals;
};

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;                       // meaningful iff Optimal
    std::vector<Rational> point;              // meaningful iff Optimal
    std::optional<LpCertificate> certificate; // present iff Optimal
};

// Exact primal simplex, Bland's rule, two phases. Deterministic: identical
// inputs give identical outcomes including the point. Requires all
// integrality flags off; throws InputError on arity mismatch or a set flag.
LpOutcome simplex_solve(const LpProblem& problem);

// Re-substitutes the point into every constraint and the objective; for
// Optimal outcomes also verifies dual feasibility and strong duality from
// the certificate. True iff everything holds exactly.
bool check_outcome(const LpProblem& problem, const LpOutcome& outcome);

struct IlpOptions {
    // Per-integer-variable upper bound for the initial search box; when
    // absent every integer variable starts at |x_j| <= 32.
    std::optional<std::vector<Rational>> search_box;
    int box_growth_limit = 4;
};

struct IlpOutcome {
    LpOutcome outcome;
    bool optimality_certified = false;
};

// Branch-and-bound minimizer over the LP relaxation. Branches on the
// fractional variable with the largest fractional part, depth-first,
// children ordered by bound. See IlpOptions for the box policy; an
// uncertified incumbent is flagged, never silently returned.
// Throws PreconditionError when the relaxation is unbounded.
IlpOutcome ilp_minimize(const LpProblem& problem, const IlpOptions& options = {});

} // namespace mld

#endif
