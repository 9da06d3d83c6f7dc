#include "mld/discrepancy.hpp"

#include <stdexcept>

#include "mld/errors.hpp"

namespace mld {

BoundaryCoefficients BoundaryCoefficients::ones(int dimension) {
    return BoundaryCoefficients{std::vector<Rational>(dimension, Rational(1))};
}

BoundaryCoefficients BoundaryCoefficients::of(std::vector<Rational> delta) {
    for (const auto& d : delta)
        if (d < 0 || d > 1)
            throw InputError("delta: coefficients must lie in [0, 1]");
    return BoundaryCoefficients{std::move(delta)};
}

bool BoundaryCoefficients::all_ones() const {
    for (const auto& d : delta)
        if (d != 1) return false;
    return true;
}

MldValue MldValue::finite(Rational v) {
    MldValue out;
    out.finite_ = true;
    out.value_ = std::move(v);
    return out;
}

const Rational& MldValue::value() const {
    if (!finite_) throw std::logic_error("MldValue: minus infinity has no value");
    return value_;
}

bool MldValue::operator==(const MldValue& other) const {
    if (finite_ != other.finite_) return false;
    return !finite_ || value_ == other.value_;
}

namespace {

void check_delta(const SupportSet& s, const BoundaryCoefficients& d) {
    if (d.delta.size() != static_cast<std::size_t>(s.dimension()))
        throw InputError("delta: dimension mismatch");
    for (const auto& v : d.delta)
        if (v < 0 || v > 1) throw InputError("delta: coefficients must lie in [0, 1]");
}

} // namespace

Rational phi(const SupportSet& s, const BoundaryCoefficients& d, const Covector& a) {
    check_delta(s, d);
    Rational pairing = 0;
    for (std::size_t i = 0; i < d.delta.size(); ++i) pairing += d.delta[i] * a.w[i];
    return pairing - supporting_value(s, a);
}

bool is_log_canonical(const SupportSet& s, const BoundaryCoefficients& d) {
    check_delta(s, d);
    return polyhedron_contains(s, d.delta);
}

namespace {

// minimize sum(delta_i a_i) - t  with  t <= (a, m) per Newton vertex,
// a_i >= 1 integer, t free. At the optimum t = l_Gamma(a) because -t is
// minimized, so the objective value is min phi.
LpProblem mld_program(const SupportSet& s, const BoundaryCoefficients& d) {
    const int dim = s.dimension();
    const std::size_t nvars = dim + 1; // a_0..a_n, then t
    LpProblem lp;
    lp.objective.assign(nvars, Rational(0));
    for (int i = 0; i < dim; ++i) lp.objective[i] = d.delta[i];
    lp.objective[dim] = -1;
    lp.lower_bounds.assign(nvars, Rational(1));
    lp.lower_bounds[dim] = std::nullopt;
    lp.integral.assign(nvars, true);
    lp.integral[dim] = false;
    for (const auto& m : newton_vertices(s)) {
        std::vector<Rational> row(nvars, Rational(0));
        for (int i = 0; i < dim; ++i) row[i] = -m.e[i];
        row[dim] = 1;
        lp.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
    }
    return lp;
}

Covector witness_from_point(const SupportSet& s, const std::vector<Rational>& point) {
    Covector a;
    a.w.reserve(s.dimension());
    for (int i = 0; i < s.dimension(); ++i) {
        const Rational& v = point[i];
        if (!is_integral(v))
            throw std::logic_error("mld: integer program returned a fractional witness");
        a.w.push_back(static_cast<long>(v.get_num().get_si()));
    }
    return a;
}

} // namespace

MldOutcome mld_pair(const SupportSet& s, const BoundaryCoefficients& d, const IlpOptions& ilp) {
    check_delta(s, d);
    if (!is_log_canonical(s, d)) {
        // phi takes negative values, and by homogeneity scales to -infinity;
        // the containment LP is an exact proof, so this branch is certified.
        return MldOutcome{MldValue::minus_infinity(), std::nullopt, true};
    }
    IlpOutcome solved = ilp_minimize(mld_program(s, d), ilp);
    if (solved.outcome.status != LpStatus::Optimal)
        throw std::logic_error("mld: integer program lost the all-ones feasible point");
    return MldOutcome{MldValue::finite(solved.outcome.value),
                      witness_from_point(s, solved.outcome.point), solved.optimality_certified};
}

bool intersects_strict_transform(const SupportSet& s, const Covector& a) {
    return trace(s, a).members.size() >= 2;
}

long multiplicity(const SupportSet& s) {
    const Rational v = supporting_value(s, std::vector<Rational>(s.dimension(), Rational(1)));
    return static_cast<long>(v.get_num().get_si());
}

Rational ordinary_blowup_discrepancy(const SupportSet& s) {
    const long n = s.dimension() - 1;
    return Rational(n) - Rational(multiplicity(s) - 1);
}

LctResult lct(const SupportSet& s) {
    // minimize t subject to t*(1,..,1) = sum(lambda_j m_j) + r, lambda >= 0,
    // sum lambda = 1, r >= 0; variables are t then the lambdas.
    const std::size_t k = s.points().size();
    LpProblem lp;
    lp.objective.assign(k + 1, Rational(0));
    lp.objective[0] = 1;
    lp.lower_bounds.assign(k + 1, Rational(0));
    for (int i = 0; i < s.dimension(); ++i) {
        std::vector<Rational> row(k + 1, Rational(0));
        row[0] = -1;
        for (std::size_t j = 0; j < k; ++j) row[j + 1] = s.points()[j].e[i];
        lp.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
    }
    {
        std::vector<Rational> row(k + 1, Rational(1));
        row[0] = 0;
        lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
    }
    LpOutcome out = simplex_solve(lp);
    if (out.status != LpStatus::Optimal || out.value <= 0)
        throw std::logic_error("lct: threshold program must have a positive optimum");
    LctResult result;
    result.raw = 1 / out.value;
    result.capped = std::min(result.raw, Rational(1));
    return result;
}

MldReport full_report(const SupportSet& s, const BoundaryCoefficients& d,
                      const ReportOptions& options) {
    check_delta(s, d);
    MldReport report;
    report.log_canonical = is_log_canonical(s, d);
    report.multiplicity = multiplicity(s);
    report.ordinary_blowup_discrepancy = ordinary_blowup_discrepancy(s);
    report.smooth = report.multiplicity == 1;

    MldOutcome outcome = mld_pair(s, d, options.ilp);
    report.mld = outcome.mld;
    report.witness = outcome.witness;
    report.certified = outcome.certified;

    if (options.oracle_box) {
        report.oracle = brute_force_min(s, d, *options.oracle_box, options.max_enumeration);
        if (report.mld.is_finite()) {
            // The box minimum can only overshoot the true minimum (clipping);
            // undershooting it, or missing it when both sides are certified,
            // is a bug by definition.
            bool agrees = report.oracle->min_value >= report.mld.value();
            if (outcome.certified && report.oracle->interior)
                agrees = agrees && report.oracle->min_value == report.mld.value();
            report.oracle_agrees = agrees;
        } else {
            report.oracle_agrees = true;
        }

        // Prefer a proper-cone minimizer for reporting when the oracle
        // confirms the value; the minimum is attained inside some proper
        // cone, so an arbitrary tie-break should not hide that.
        if (report.witness && report.oracle->min_value == report.mld.value() &&
            !in_proper_cone(s, *report.witness)) {
            for (const auto& candidate : report.oracle->minimizers) {
                if (in_proper_cone(s, candidate)) {
                    report.witness = candidate;
                    break;
                }
            }
        }
    }

    if (report.witness) {
        report.witness_trace = trace(s, *report.witness);
        report.witness_in_proper_cone = in_proper_cone(s, *report.witness);
        report.witness_meets_strict_transform = intersects_strict_transform(s, *report.witness);
    }
    return report;
}

} // namespace mld
