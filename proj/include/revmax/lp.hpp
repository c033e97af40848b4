#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace revmax {

// Generic maximization LP:
//   max  objective . x
//   s.t. each constraint row (sparse)  {<=, >=, =}  rhs
//        lower[j] <= x[j] <= upper[j],  lower in {0, -inf}, upper finite or +inf
struct LinearConstraint {
    enum class Relation { less_equal, greater_equal, equal };
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
    Relation relation = Relation::less_equal;
    double rhs = 0.0;
};

struct LinearProgram {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<double> lower;  // 0 or -inf
    std::vector<double> upper;  // finite or +inf
    std::vector<LinearConstraint> constraints;

    // returns the new variable's index
    int add_variable(double lo, double hi, double obj_coeff);
    void add_constraint(std::vector<std::pair<int, double>> coeffs,
                        LinearConstraint::Relation rel, double rhs);

    static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double objective_value = 0.0;
    std::vector<double> assignment;  // size num_vars when status == optimal
};

struct SimplexOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    // <= 0 means the default 50 * (num_vars + num_constraints)
    long max_iterations = 0;
};

// Dense two-phase primal simplex on the condensed (Tucker) tableau. Pivoting
// is Dantzig's rule, switching to Bland's rule while the objective stalls so
// the walk cannot cycle. All tie-breaks are deterministic. Statuses are
// reported honestly; a forced pivot below 1e-12 raises lp_error with the
// row/column indices.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts = {});

// Plain-text dump, one line per constraint: "coef*var + ... <= rhs".
// `var_name(j)` supplies variable names; pass {} for x0, x1, ...
std::string dump_lp(const LinearProgram& lp,
                    const std::vector<std::string>& var_names = {});

}  // namespace revmax
