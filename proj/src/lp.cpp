#include "mld/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "mld/errors.hpp"

namespace mld {

void LpProblem::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    constraints.push_back(LpConstraint{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

void validate_problem(const LpProblem& p) {
    const std::size_t n = p.num_vars();
    if (n == 0) throw InputError("lp: problem has no variables");
    for (const auto& row : p.constraints)
        if (row.coeffs.size() != n)
            throw InputError("lp: constraint arity mismatch");
    if (!p.lower_bounds.empty() && p.lower_bounds.size() != n)
        throw InputError("lp: lower_bounds arity mismatch");
    if (!p.integral.empty() && p.integral.size() != n)
        throw InputError("lp: integral flags arity mismatch");
}

std::optional<Rational> lower_bound_of(const LpProblem& p, std::size_t j) {
    if (p.lower_bounds.empty()) return std::nullopt;
    return p.lower_bounds[j];
}

// Exact primal simplex over the standard form
//   minimize c.u  s.t.  A u = b, u >= 0,
// built from the general problem by shifting lower-bounded variables,
// splitting free variables, adding slack/surplus columns, normalizing
// b >= 0, and appending one artificial column per row (kept through both
// phases so the duals can be read off them; barred from entering).
class Simplex {
public:
    explicit Simplex(const LpProblem& p) : p_(p) { build(); }

    LpOutcome run() {
        if (!phase1()) return LpOutcome{LpStatus::Infeasible, 0, {}, std::nullopt};
        drop_basic_artificials();
        if (!phase2()) return LpOutcome{LpStatus::Unbounded, 0, {}, std::nullopt};
        return extract();
    }

private:
    const LpProblem& p_;

    std::size_t n_ = 0;        // original variables
    std::size_t ncols_ = 0;    // structural + slack + artificial
    std::size_t first_art_ = 0;

    std::vector<int> pos_col_, neg_col_;   // per original variable; -1 if none
    std::vector<Rational> offset_;         // lower-bound shift per variable

    std::vector<std::vector<Rational>> A_; // tableau, mutated by pivots
    std::vector<Rational> b_;
    std::vector<std::vector<Rational>> A0_; // pristine normalized matrix
    std::vector<Rational> b0_;
    std::vector<int> basis_;               // basic column per live row
    std::vector<int> row_origin_;          // live row -> original constraint
    std::vector<int> row_sign_;            // per original constraint
    std::vector<Rational> cost_;           // phase-2 cost per column

    void build() {
        n_ = p_.num_vars();
        const std::size_t m = p_.constraints.size();

        pos_col_.assign(n_, -1);
        neg_col_.assign(n_, -1);
        offset_.assign(n_, Rational(0));
        std::size_t col = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (auto lb = lower_bound_of(p_, j)) {
                pos_col_[j] = static_cast<int>(col++);
                offset_[j] = *lb;
            } else {
                pos_col_[j] = static_cast<int>(col++);
                neg_col_[j] = static_cast<int>(col++);
            }
        }
        const std::size_t structural = col;
        std::size_t slacks = 0;
        for (const auto& row : p_.constraints)
            if (row.rel != Relation::Equal) ++slacks;
        first_art_ = structural + slacks;
        ncols_ = first_art_ + m;

        A_.assign(m, std::vector<Rational>(ncols_, Rational(0)));
        b_.assign(m, Rational(0));
        basis_.assign(m, -1);
        row_origin_.resize(m);
        row_sign_.assign(m, 1);
        cost_.assign(ncols_, Rational(0));

        for (std::size_t j = 0; j < n_; ++j) {
            cost_[pos_col_[j]] = p_.objective[j];
            if (neg_col_[j] >= 0) cost_[neg_col_[j]] = -p_.objective[j];
        }

        std::size_t slack = structural;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = p_.constraints[i];
            row_origin_[i] = static_cast<int>(i);
            Rational rhs = row.rhs;
            for (std::size_t j = 0; j < n_; ++j) {
                A_[i][pos_col_[j]] = row.coeffs[j];
                if (neg_col_[j] >= 0) A_[i][neg_col_[j]] = -row.coeffs[j];
                rhs -= row.coeffs[j] * offset_[j];
            }
            int slack_col = -1;
            if (row.rel == Relation::LessEqual) {
                slack_col = static_cast<int>(slack++);
                A_[i][slack_col] = 1;
            } else if (row.rel == Relation::GreaterEqual) {
                slack_col = static_cast<int>(slack++);
                A_[i][slack_col] = -1;
            }
            if (rhs < 0) {
                row_sign_[i] = -1;
                for (auto& v : A_[i]) v = -v;
                rhs = -rhs;
            }
            b_[i] = rhs;
            const std::size_t art = first_art_ + i;
            A_[i][art] = 1;
            if (slack_col >= 0 && A_[i][slack_col] == 1)
                basis_[i] = slack_col;
            else
                basis_[i] = static_cast<int>(art);
        }
        A0_ = A_;
        b0_ = b_;
    }

    bool is_artificial(int c) const { return static_cast<std::size_t>(c) >= first_art_; }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / A_[row][col];
        for (auto& v : A_[row]) v *= inv;
        b_[row] *= inv;
        for (std::size_t i = 0; i < A_.size(); ++i) {
            if (i == row || A_[i][col] == 0) continue;
            const Rational factor = A_[i][col];
            for (std::size_t j = 0; j < ncols_; ++j)
                A_[i][j] -= factor * A_[row][j];
            b_[i] -= factor * b_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    // Bland's rule: entering = least-index column with negative reduced
    // cost; leaving = min ratio, ties by least basic column index.
    // Returns false on unbounded descent.
    bool optimize(const std::vector<Rational>& cost) {
        for (;;) {
            int enter = -1;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (is_artificial(static_cast<int>(j))) continue;
                if (std::find(basis_.begin(), basis_.end(), static_cast<int>(j)) != basis_.end())
                    continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < A_.size(); ++i) {
                    if (cost[basis_[i]] != 0 && A_[i][j] != 0)
                        reduced -= cost[basis_[i]] * A_[i][j];
                }
                if (reduced < 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;

            int leave_row = -1;
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < A_.size(); ++i) {
                if (A_[i][enter] <= 0) continue;
                Rational ratio = b_[i] / A_[i][enter];
                if (leave_row < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave_row])) {
                    leave_row = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave_row < 0) return false;
            pivot(static_cast<std::size_t>(leave_row), static_cast<std::size_t>(enter));
        }
    }

    bool phase1() {
        bool need = false;
        for (int c : basis_)
            if (is_artificial(c)) need = true;
        if (!need) return true;
        std::vector<Rational> cost(ncols_, Rational(0));
        for (std::size_t j = first_art_; j < ncols_; ++j) cost[j] = 1;
        if (!optimize(cost))
            throw std::logic_error("lp: phase 1 cannot be unbounded");
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < A_.size(); ++i)
            if (is_artificial(basis_[i])) infeasibility += b_[i];
        return infeasibility == 0;
    }

    // After a feasible phase 1, pivot zero-valued artificials out of the
    // basis; a row with no structural pivot left is redundant and dropped.
    void drop_basic_artificials() {
        for (std::size_t i = 0; i < A_.size();) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            int col = -1;
            for (std::size_t j = 0; j < first_art_; ++j) {
                if (A_[i][j] != 0) {
                    col = static_cast<int>(j);
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, static_cast<std::size_t>(col));
                ++i;
            } else {
                A_.erase(A_.begin() + i);
                b_.erase(b_.begin() + i);
                basis_.erase(basis_.begin() + i);
                row_origin_.erase(row_origin_.begin() + i);
            }
        }
    }

    bool phase2() { return optimize(cost_); }

    LpOutcome extract() const {
        std::vector<Rational> u(ncols_, Rational(0));
        for (std::size_t i = 0; i < A_.size(); ++i) u[basis_[i]] = b_[i];

        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            x[j] = offset_[j] + u[pos_col_[j]];
            if (neg_col_[j] >= 0) x[j] -= u[neg_col_[j]];
        }
        Rational value = 0;
        for (std::size_t j = 0; j < n_; ++j) value += p_.objective[j] * x[j];

        LpCertificate cert;
        cert.basis = basis_;
        cert.duals.assign(p_.constraints.size(), Rational(0));
        for (std::size_t i = 0; i < A_.size(); ++i) {
            const std::size_t art = first_art_ + row_origin_[i];
            Rational y = 0;
            for (std::size_t k = 0; k < A_.size(); ++k)
                if (cost_[basis_[k]] != 0 && A_[k][art] != 0)
                    y += cost_[basis_[k]] * A_[k][art];
            cert.duals[row_origin_[i]] = row_sign_[row_origin_[i]] * y;
        }

        LpOutcome out{LpStatus::Optimal, value, std::move(x), std::move(cert)};
        self_check(out, u);
        return out;
    }

    // Exact optimality certificate: primal feasibility, dual feasibility of
    // the normalized standard form over structural and slack columns, and
    // strong duality. Failure means a solver bug.
    void self_check(const LpOutcome& out, const std::vector<Rational>& u) const {
        if (!primal_feasible(p_, out)) throw std::logic_error("lp: primal check failed");

        std::vector<Rational> y(p_.constraints.size(), Rational(0));
        for (std::size_t i = 0; i < A_.size(); ++i) {
            const int orig = row_origin_[i];
            y[orig] = row_sign_[orig] * out.certificate->duals[orig];
        }
        for (std::size_t j = 0; j < first_art_; ++j) {
            Rational reduced = cost_[j];
            for (std::size_t i = 0; i < y.size(); ++i)
                if (y[i] != 0) reduced -= y[i] * A0_[i][j];
            if (reduced < 0) throw std::logic_error("lp: dual feasibility check failed");
        }
        Rational dual_value = 0;
        for (std::size_t i = 0; i < y.size(); ++i) dual_value += y[i] * b0_[i];
        Rational primal_std = 0;
        for (std::size_t j = 0; j < first_art_; ++j) primal_std += cost_[j] * u[j];
        if (dual_value != primal_std) throw std::logic_error("lp: strong duality check failed");
    }

public:
    static bool primal_feasible(const LpProblem& p, const LpOutcome& out) {
        if (out.point.size() != p.num_vars()) return false;
        for (std::size_t j = 0; j < p.num_vars(); ++j)
            if (auto lb = lower_bound_of(p, j); lb && out.point[j] < *lb) return false;
        for (const auto& row : p.constraints) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < row.coeffs.size(); ++j)
                lhs += row.coeffs[j] * out.point[j];
            switch (row.rel) {
                case Relation::GreaterEqual:
                    if (lhs < row.rhs) return false;
                    break;
                case Relation::LessEqual:
                    if (lhs > row.rhs) return false;
                    break;
                case Relation::Equal:
                    if (lhs != row.rhs) return false;
                    break;
            }
        }
        Rational value = 0;
        for (std::size_t j = 0; j < p.num_vars(); ++j) value += p.objective[j] * out.point[j];
        return value == out.value;
    }
};

LpOutcome solve_ignoring_integrality(const LpProblem& p) {
    validate_problem(p);
    return Simplex(p).run();
}

} // namespace

LpOutcome simplex_solve(const LpProblem& problem) {
    validate_problem(problem);
    for (bool flag : problem.integral)
        if (flag) throw InputError("lp: simplex_solve requires all integrality flags off");
    return Simplex(problem).run();
}

bool check_outcome(const LpProblem& problem, const LpOutcome& outcome) {
    if (outcome.status != LpStatus::Optimal) return true;
    return Simplex::primal_feasible(problem, outcome);
}

namespace {

std::vector<int> integer_vars(const LpProblem& p) {
    std::vector<int> out;
    for (std::size_t j = 0; j < p.integral.size(); ++j)
        if (p.integral[j]) out.push_back(static_cast<int>(j));
    return out;
}

LpProblem relaxation_of(const LpProblem& p) {
    LpProblem r = p;
    r.integral.assign(p.num_vars(), false);
    return r;
}

std::vector<Rational> unit_row(std::size_t n, std::size_t j, int sign) {
    std::vector<Rational> row(n, Rational(0));
    row[j] = sign;
    return row;
}

struct Incumbent {
    std::optional<Rational> value;
    std::vector<Rational> point;

    bool beats(const Rational& candidate) const { return value && candidate >= *value; }
    void offer(const Rational& v, const std::vector<Rational>& x) {
        if (!value || v < *value) {
            value = v;
            point = x;
        }
    }
};

// Depth-first branch and bound inside a boxed problem. Children are solved
// when created and visited better-bound-first (down branch on ties).
void explore(const LpProblem& prob, const LpOutcome& out, const std::vector<int>& int_vars,
             Incumbent& inc) {
    int branch_var = -1;
    Rational best_frac = 0;
    for (int j : int_vars) {
        Rational f = fractional_part(out.point[j]);
        if (f != 0 && f > best_frac) {
            branch_var = j;
            best_frac = f;
        }
    }
    if (branch_var < 0) {
        inc.offer(out.value, out.point);
        return;
    }

    const std::size_t n = prob.num_vars();
    LpProblem down = prob;
    down.add_constraint(unit_row(n, branch_var, 1), Relation::LessEqual,
                        Rational(floor_int(out.point[branch_var])));
    LpProblem up = prob;
    up.add_constraint(unit_row(n, branch_var, 1), Relation::GreaterEqual,
                      Rational(ceil_int(out.point[branch_var])));

    LpOutcome down_out = solve_ignoring_integrality(down);
    LpOutcome up_out = solve_ignoring_integrality(up);
    if (down_out.status == LpStatus::Unbounded || up_out.status == LpStatus::Unbounded)
        throw PreconditionError("ilp: objective unbounded below on a branch");

    struct Child {
        const LpProblem* prob;
        const LpOutcome* out;
    };
    Child first{&down, &down_out};
    Child second{&up, &up_out};
    const bool down_usable = down_out.status == LpStatus::Optimal;
    const bool up_usable = up_out.status == LpStatus::Optimal;
    if (down_usable && up_usable && up_out.value < down_out.value) std::swap(first, second);
    else if (!down_usable) std::swap(first, second);

    for (const Child& c : {first, second}) {
        if (c.out->status != LpStatus::Optimal) continue;
        if (inc.beats(c.out->value)) continue;
        explore(*c.prob, *c.out, int_vars, inc);
    }
}

// Best integer point of p within the per-variable box (upper bounds for all
// integer variables; lower bounds -box for free integer variables).
void search_box(const LpProblem& p, const std::vector<int>& int_vars,
                const std::vector<Rational>& box, Incumbent& inc) {
    LpProblem boxed = relaxation_of(p);
    const std::size_t n = p.num_vars();
    for (int j : int_vars) {
        boxed.add_constraint(unit_row(n, j, 1), Relation::LessEqual, box[j]);
        if (!lower_bound_of(p, j))
            boxed.add_constraint(unit_row(n, j, 1), Relation::GreaterEqual, -box[j]);
    }
    LpOutcome root = solve_ignoring_integrality(boxed);
    if (root.status == LpStatus::Infeasible) return;
    if (root.status == LpStatus::Unbounded)
        throw PreconditionError("ilp: objective unbounded below inside the search box");
    if (inc.beats(root.value)) return;
    explore(boxed, root, int_vars, inc);
}

// Per-integer-variable extreme of `region`'s relaxation. Returns false when
// some direction is unbounded; otherwise fills the integer bounding box.
bool integer_bounding_box(const LpProblem& region, const std::vector<int>& int_vars,
                          std::vector<Rational>& upper, std::vector<Rational>& lower) {
    LpProblem probe = relaxation_of(region);
    for (int j : int_vars) {
        probe.objective.assign(probe.num_vars(), Rational(0));
        probe.objective[j] = -1;
        LpOutcome hi = solve_ignoring_integrality(probe);
        if (hi.status == LpStatus::Unbounded) return false;
        if (hi.status != LpStatus::Optimal)
            throw std::logic_error("ilp: bounding probe on a feasible region failed");
        upper[j] = Rational(floor_int(-hi.value));
        if (!lower_bound_of(region, j)) {
            probe.objective[j] = 1;
            LpOutcome lo = solve_ignoring_integrality(probe);
            if (lo.status == LpStatus::Unbounded) return false;
            if (lo.status != LpStatus::Optimal)
                throw std::logic_error("ilp: bounding probe on a feasible region failed");
            lower[j] = Rational(ceil_int(lo.value));
        }
    }
    return true;
}

} // namespace

IlpOutcome ilp_minimize(const LpProblem& problem, const IlpOptions& options) {
    validate_problem(problem);
    if (options.box_growth_limit < 0)
        throw InputError("ilp: box_growth_limit must be non-negative");
    const std::vector<int> int_vars = integer_vars(problem);
    if (int_vars.empty()) return IlpOutcome{simplex_solve(problem), true};

    LpOutcome root = solve_ignoring_integrality(problem);
    if (root.status == LpStatus::Infeasible)
        return IlpOutcome{root, true};
    if (root.status == LpStatus::Unbounded)
        throw PreconditionError("ilp: LP relaxation is unbounded");
    const Rational relaxation_bound = root.value;

    const std::size_t n = problem.num_vars();
    std::vector<Rational> box;
    if (options.search_box) {
        if (options.search_box->size() != n)
            throw InputError("ilp: search_box arity mismatch");
        box = *options.search_box;
    } else {
        box.assign(n, Rational(32));
    }

    Incumbent inc;
    for (int growth = 0; growth <= options.box_growth_limit; ++growth) {
        search_box(problem, int_vars, box, inc);

        std::vector<Rational> cut_upper(n, Rational(0)), cut_lower(n, Rational(0));
        if (inc.value) {
            if (*inc.value == relaxation_bound)
                return IlpOutcome{LpOutcome{LpStatus::Optimal, *inc.value, inc.point, std::nullopt},
                                  true};
            LpProblem cut = problem;
            cut.add_constraint(problem.objective, Relation::LessEqual, *inc.value);
            if (integer_bounding_box(cut, int_vars, cut_upper, cut_lower)) {
                bool enclosed = true;
                for (int j : int_vars) {
                    if (cut_upper[j] > box[j]) enclosed = false;
                    if (!lower_bound_of(problem, j) && cut_lower[j] < -box[j]) enclosed = false;
                }
                if (enclosed)
                    return IlpOutcome{
                        LpOutcome{LpStatus::Optimal, *inc.value, inc.point, std::nullopt}, true};
                for (int j : int_vars) {
                    Rational grown = box[j] * 2;
                    Rational needed = cut_upper[j];
                    if (!lower_bound_of(problem, j) && -cut_lower[j] > needed)
                        needed = -cut_lower[j];
                    box[j] = std::max(grown, needed);
                }
                continue;
            }
        } else if (integer_bounding_box(problem, int_vars, cut_upper, cut_lower)) {
            // Relaxation region itself is bounded; an enclosing box with no
            // integer point proves integer infeasibility.
            bool enclosed = true;
            for (int j : int_vars) {
                if (cut_upper[j] > box[j]) enclosed = false;
                if (!lower_bound_of(problem, j) && cut_lower[j] < -box[j]) enclosed = false;
            }
            if (enclosed)
                return IlpOutcome{LpOutcome{LpStatus::Infeasible, 0, {}, std::nullopt}, true};
        }
        for (auto& bound : box) bound *= 2;
    }

    if (inc.value)
        return IlpOutcome{LpOutcome{LpStatus::Optimal, *inc.value, inc.point, std::nullopt}, false};
    return IlpOutcome{LpOutcome{LpStatus::Infeasible, 0, {}, std::nullopt}, false};
}

} // namespace mld
