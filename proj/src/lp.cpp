#include "revmax/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "revmax/errors.hpp"

namespace revmax {

int LinearProgram::add_variable(double lo, double hi, double obj_coeff) {
    objective.push_back(obj_coeff);
    lower.push_back(lo);
    upper.push_back(hi);
    return num_vars++;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, double>> coeffs,
                                   LinearConstraint::Relation rel, double rhs) {
    constraints.push_back({std::move(coeffs), rel, rhs});
}

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::iteration_limit: return "iteration_limit";
    }
    return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotMin = 1e-12;   // forced pivots below this are a breakdown
constexpr double kEntryTol = 1e-9;    // ratio-test eligibility: smaller is noise
constexpr double kHarrisSlack = 1e-9;  // step slack absorbing rhs roundoff
constexpr double kTieTol = 1e-12;
constexpr int kStallLimit = 2000;     // pivots without progress before Bland's rule

void validate(const LinearProgram& lp) {
    if (lp.num_vars < 0 || lp.objective.size() != static_cast<std::size_t>(lp.num_vars) ||
        lp.lower.size() != static_cast<std::size_t>(lp.num_vars) ||
        lp.upper.size() != static_cast<std::size_t>(lp.num_vars))
        throw validation_error("lp: objective/bounds sizes do not match num_vars");
    for (int j = 0; j < lp.num_vars; ++j) {
        if (!std::isfinite(lp.objective[static_cast<std::size_t>(j)]))
            throw validation_error("lp: non-finite objective coefficient at variable " +
                                   std::to_string(j));
        double lo = lp.lower[static_cast<std::size_t>(j)];
        double hi = lp.upper[static_cast<std::size_t>(j)];
        if (!(lo == 0.0 || lo == -kInf))
            throw validation_error("lp: lower bound of variable " + std::to_string(j) +
                                   " must be 0 or -inf");
        if (std::isnan(hi) || hi == -kInf)
            throw validation_error("lp: bad upper bound at variable " + std::to_string(j));
    }
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        const auto& c = lp.constraints[r];
        if (!std::isfinite(c.rhs))
            throw validation_error("lp: non-finite rhs in constraint " + std::to_string(r));
        for (const auto& [j, a] : c.coeffs) {
            if (j < 0 || j >= lp.num_vars)
                throw validation_error("lp: constraint " + std::to_string(r) +
                                       " references invalid variable " + std::to_string(j));
            if (!std::isfinite(a))
                throw validation_error("lp: non-finite coefficient in constraint " +
                                       std::to_string(r));
        }
    }
}

// Condensed (Tucker) tableau over the nonbasic columns only:
//   basic_i = rhs_i - sum_j a(i,j) * nonbasic_j
//   z       = z0    + sum_j zrow_j * nonbasic_j
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<double> a;      // rows x cols, row-major
    std::vector<double> rhs;    // per row
    std::vector<double> zrow;   // per column
    double z0 = 0.0;
    std::vector<int> basic;     // label per row
    std::vector<int> nonbasic;  // label per column

    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const {
        return a.data() + static_cast<std::size_t>(i) * cols;
    }

    void pivot(int r, int c) {
        double* pr = row(r);
        double p = pr[c];
        if (std::fabs(p) < kPivotMin)
            throw lp_error("simplex: degenerate pivot " + std::to_string(p) + " at row " +
                           std::to_string(r) + ", column " + std::to_string(c));
        double inv = 1.0 / p;
        for (int j = 0; j < cols; ++j) pr[j] *= inv;  // pr[c] becomes 1
        rhs[static_cast<std::size_t>(r)] *= inv;

        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            double* ri = row(i);
            double f = ri[c];
            if (f != 0.0) {
                for (int j = 0; j < cols; ++j) ri[j] -= f * pr[j];
                rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(r)];
            }
            ri[c] = -f * inv;
        }
        double f = zrow[static_cast<std::size_t>(c)];
        if (f != 0.0) {
            for (int j = 0; j < cols; ++j) zrow[static_cast<std::size_t>(j)] -= f * pr[j];
            z0 += f * rhs[static_cast<std::size_t>(r)];
        }
        zrow[static_cast<std::size_t>(c)] = -f * inv;
        pr[c] = inv;
        std::swap(basic[static_cast<std::size_t>(r)], nonbasic[static_cast<std::size_t>(c)]);
    }

    int entering_dantzig(double tol) const {
        int best = -1;
        double best_val = 0.0;
        for (int j = 0; j < cols; ++j) {
            double v = zrow[static_cast<std::size_t>(j)];
            if (v <= tol) continue;
            if (best < 0 || v > best_val + kTieTol) {
                best = j;
                best_val = v;
            } else if (v > best_val - kTieTol &&
                       nonbasic[static_cast<std::size_t>(j)] <
                           nonbasic[static_cast<std::size_t>(best)]) {
                best = j;
                best_val = std::max(best_val, v);
            }
        }
        return best;
    }

    int entering_bland(double tol) const {
        int best = -1;
        for (int j = 0; j < cols; ++j)
            if (zrow[static_cast<std::size_t>(j)] > tol &&
                (best < 0 || nonbasic[static_cast<std::size_t>(j)] <
                                 nonbasic[static_cast<std::size_t>(best)]))
                best = j;
        return best;
    }

    // Ratio test for entering column c; -1 means no limit (unbounded).
    // Two passes in the style of Harris: pass 1 finds the tightest step with a
    // small feasibility slack, pass 2 takes the numerically largest pivot that
    // respects it (smallest basic label in Bland mode). Entries below the
    // column-scaled threshold are cancellation noise, not pivots: dividing by
    // one would blow the dictionary apart.
    int leaving(int c, bool bland) const {
        double col_max = 0.0;
        for (int i = 0; i < rows; ++i)
            col_max = std::max(col_max, std::fabs(row(i)[c]));
        const double eligible = std::max(kEntryTol, 1e-9 * col_max);

        double theta = kInf;
        for (int i = 0; i < rows; ++i) {
            double t = row(i)[c];
            if (t <= eligible) continue;
            double num = std::max(rhs[static_cast<std::size_t>(i)], 0.0);
            theta = std::min(theta, (num + kHarrisSlack) / t);
        }
        if (theta == kInf) return -1;

        int best = -1;
        double best_pivot = 0.0;
        for (int i = 0; i < rows; ++i) {
            double t = row(i)[c];
            if (t <= eligible) continue;
            double ratio = std::max(rhs[static_cast<std::size_t>(i)], 0.0) / t;
            if (ratio > theta) continue;
            if (bland) {
                if (best < 0 || basic[static_cast<std::size_t>(i)] <
                                    basic[static_cast<std::size_t>(best)])
                    best = i;
            } else if (best < 0 || t > best_pivot + kTieTol ||
                       (t > best_pivot - kTieTol &&
                        basic[static_cast<std::size_t>(i)] <
                            basic[static_cast<std::size_t>(best)])) {
                best = i;
                best_pivot = std::max(best_pivot, t);
            }
        }
        return best;
    }
};

enum class RunOutcome { reached_optimum, unbounded_column, hit_iteration_cap, aux_left_basis };

// Pivot until the current objective row is optimal. Dantzig's rule by
// default; after kStallLimit pivots without objective progress, Bland's rule
// takes over until progress resumes, which rules out cycling.
RunOutcome run_simplex(Tableau& t, long& budget, double opt_tol, int watch_label) {
    bool bland = false;
    int stall = 0;
    double prev = t.z0;
    while (true) {
        int c = bland ? t.entering_bland(opt_tol) : t.entering_dantzig(opt_tol);
        if (c < 0) return RunOutcome::reached_optimum;
        if (budget <= 0) return RunOutcome::hit_iteration_cap;
        int r = t.leaving(c, bland);
        if (r < 0) return RunOutcome::unbounded_column;
        int leaving_label = t.basic[static_cast<std::size_t>(r)];
        t.pivot(r, c);
        --budget;
        if (watch_label >= 0 && leaving_label == watch_label)
            return RunOutcome::aux_left_basis;
        if (t.z0 > prev + 1e-12 * (1.0 + std::fabs(t.z0))) {
            stall = 0;
            bland = false;
        } else if (++stall >= kStallLimit) {
            bland = true;
        }
        prev = t.z0;
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts) {
    validate(lp);

    // --- standard form: max ctilde.y, A y <= b, y >= 0 ---
    // free variables split as pos - neg; finite upper bounds become rows
    std::vector<int> pos_col(static_cast<std::size_t>(lp.num_vars));
    std::vector<int> neg_col(static_cast<std::size_t>(lp.num_vars), -1);
    int ncols = 0;
    for (int j = 0; j < lp.num_vars; ++j) {
        pos_col[static_cast<std::size_t>(j)] = ncols++;
        if (lp.lower[static_cast<std::size_t>(j)] == -kInf)
            neg_col[static_cast<std::size_t>(j)] = ncols++;
    }
    std::vector<double> cobj(static_cast<std::size_t>(ncols), 0.0);
    for (int j = 0; j < lp.num_vars; ++j) {
        cobj[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(j)])] =
            lp.objective[static_cast<std::size_t>(j)];
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            cobj[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])] =
                -lp.objective[static_cast<std::size_t>(j)];
    }

    // expanded rows: (sign, source constraint) plus upper-bound rows
    struct Row {
        double sign;  // +1 keeps the constraint, -1 negates (>= rows)
        int source;   // constraint index, or -(var+1) for an upper bound row
    };
    std::vector<Row> rows;
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        switch (lp.constraints[r].relation) {
            case LinearConstraint::Relation::less_equal:
                rows.push_back({+1.0, static_cast<int>(r)});
                break;
            case LinearConstraint::Relation::greater_equal:
                rows.push_back({-1.0, static_cast<int>(r)});
                break;
            case LinearConstraint::Relation::equal:
                rows.push_back({+1.0, static_cast<int>(r)});
                rows.push_back({-1.0, static_cast<int>(r)});
                break;
        }
    }
    for (int j = 0; j < lp.num_vars; ++j)
        if (lp.upper[static_cast<std::size_t>(j)] != kInf) rows.push_back({+1.0, -(j + 1)});

    const int m = static_cast<int>(rows.size());
    bool needs_phase1 = false;

    // densify one standard-form row from the pristine input; returns its rhs
    auto fill_row = [&](int i, double* dense) -> double {
        std::fill(dense, dense + ncols, 0.0);
        const Row& rw = rows[static_cast<std::size_t>(i)];
        if (rw.source >= 0) {
            const auto& c = lp.constraints[static_cast<std::size_t>(rw.source)];
            for (const auto& [j, aij] : c.coeffs) {
                dense[pos_col[static_cast<std::size_t>(j)]] += rw.sign * aij;
                if (neg_col[static_cast<std::size_t>(j)] >= 0)
                    dense[neg_col[static_cast<std::size_t>(j)]] -= rw.sign * aij;
            }
            return rw.sign * c.rhs;
        }
        int j = -rw.source - 1;
        dense[pos_col[static_cast<std::size_t>(j)]] = 1.0;
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            dense[neg_col[static_cast<std::size_t>(j)]] = -1.0;
        return lp.upper[static_cast<std::size_t>(j)];
    };

    Tableau t;
    t.rows = m;
    t.cols = ncols;  // aux column appended later if needed
    t.a.assign(static_cast<std::size_t>(m) * ncols, 0.0);
    t.rhs.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        t.rhs[static_cast<std::size_t>(i)] = fill_row(i, t.row(i));
        if (t.rhs[static_cast<std::size_t>(i)] < -opts.feasibility_tol) needs_phase1 = true;
    }

    // labels: decision columns, then slacks, then the phase-1 auxiliary
    t.nonbasic.resize(static_cast<std::size_t>(ncols));
    for (int j = 0; j < ncols; ++j) t.nonbasic[static_cast<std::size_t>(j)] = j;
    t.basic.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) t.basic[static_cast<std::size_t>(i)] = ncols + i;
    const int aux_label = ncols + m;

    long budget = opts.max_iterations > 0
                      ? opts.max_iterations
                      : 50L * (lp.num_vars + static_cast<long>(lp.constraints.size()));

    LpSolution sol;

    if (needs_phase1) {
        // auxiliary column: A y - x0 <= b, maximize -x0
        t.cols = ncols + 1;
        std::vector<double> a2(static_cast<std::size_t>(m) * t.cols);
        for (int i = 0; i < m; ++i) {
            const double* src = t.a.data() + static_cast<std::size_t>(i) * ncols;
            double* dst = a2.data() + static_cast<std::size_t>(i) * t.cols;
            std::copy(src, src + ncols, dst);
            dst[ncols] = -1.0;
        }
        t.a = std::move(a2);
        t.nonbasic.push_back(aux_label);
        t.zrow.assign(static_cast<std::size_t>(t.cols), 0.0);
        t.zrow[static_cast<std::size_t>(ncols)] = -1.0;
        t.z0 = 0.0;

        // first pivot: enter x0, leave the most violated row
        int worst = 0;
        for (int i = 1; i < m; ++i) {
            if (t.rhs[static_cast<std::size_t>(i)] < t.rhs[static_cast<std::size_t>(worst)] - kTieTol ||
                (t.rhs[static_cast<std::size_t>(i)] < t.rhs[static_cast<std::size_t>(worst)] + kTieTol &&
                 t.basic[static_cast<std::size_t>(i)] < t.basic[static_cast<std::size_t>(worst)]))
                worst = i;
        }
        t.pivot(worst, ncols);
        --budget;

        RunOutcome out = run_simplex(t, budget, opts.optimality_tol, aux_label);
        if (out == RunOutcome::hit_iteration_cap) {
            sol.status = LpStatus::iteration_limit;
            return sol;
        }
        if (out == RunOutcome::unbounded_column)
            throw lp_error("simplex: phase 1 reported an unbounded column");
        if (out == RunOutcome::reached_optimum && t.z0 < -opts.feasibility_tol) {
            sol.status = LpStatus::infeasible;
            return sol;
        }

        // x0 is zero; remove it from the tableau
        int aux_col = -1;
        for (int j = 0; j < t.cols; ++j)
            if (t.nonbasic[static_cast<std::size_t>(j)] == aux_label) aux_col = j;
        if (aux_col < 0) {
            // still basic at value 0: drive it out over the largest pivot
            int aux_row = -1;
            for (int i = 0; i < m; ++i)
                if (t.basic[static_cast<std::size_t>(i)] == aux_label) aux_row = i;
            if (aux_row >= 0) {
                int cbest = -1;
                double abest = 0.0;
                for (int j = 0; j < t.cols; ++j) {
                    double v = std::fabs(t.row(aux_row)[j]);
                    if (v <= kEntryTol) continue;
                    if (cbest < 0 || v > abest + kTieTol) {
                        cbest = j;
                        abest = v;
                    } else if (v > abest - kTieTol &&
                               t.nonbasic[static_cast<std::size_t>(j)] <
                                   t.nonbasic[static_cast<std::size_t>(cbest)]) {
                        cbest = j;
                        abest = std::max(abest, v);
                    }
                }
                if (cbest >= 0) {
                    t.pivot(aux_row, cbest);
                    --budget;
                    for (int j = 0; j < t.cols; ++j)
                        if (t.nonbasic[static_cast<std::size_t>(j)] == aux_label) aux_col = j;
                }
                // an all-zero row keeps x0 basic at 0 harmlessly: the row is
                // redundant and the label can never re-enter
            }
        }
        if (aux_col >= 0) {
            for (int i = 0; i < m; ++i) {
                double* ri = t.row(i);
                for (int j = aux_col; j + 1 < t.cols; ++j) ri[j] = ri[j + 1];
            }
            // rows still occupy the old stride; compact the buffer
            std::vector<double> a3(static_cast<std::size_t>(m) * (t.cols - 1));
            for (int i = 0; i < m; ++i) {
                const double* src = t.a.data() + static_cast<std::size_t>(i) * t.cols;
                std::copy(src, src + t.cols - 1,
                          a3.data() + static_cast<std::size_t>(i) * (t.cols - 1));
            }
            t.nonbasic.erase(t.nonbasic.begin() + aux_col);
            t.cols -= 1;
            t.a = std::move(a3);
        }
    }

    // phase-2 objective expressed over the current dictionary
    t.zrow.assign(static_cast<std::size_t>(t.cols), 0.0);
    t.z0 = 0.0;
    for (int j = 0; j < t.cols; ++j) {
        int label = t.nonbasic[static_cast<std::size_t>(j)];
        if (label < ncols)
            t.zrow[static_cast<std::size_t>(j)] = cobj[static_cast<std::size_t>(label)];
    }
    for (int i = 0; i < m; ++i) {
        int label = t.basic[static_cast<std::size_t>(i)];
        if (label < ncols) {
            double ck = cobj[static_cast<std::size_t>(label)];
            if (ck == 0.0) continue;
            t.z0 += ck * t.rhs[static_cast<std::size_t>(i)];
            const double* ri = t.row(i);
            for (int j = 0; j < t.cols; ++j)
                t.zrow[static_cast<std::size_t>(j)] -= ck * ri[j];
        }
    }

    switch (run_simplex(t, budget, opts.optimality_tol, -1)) {
        case RunOutcome::hit_iteration_cap:
            sol.status = LpStatus::iteration_limit;
            return sol;
        case RunOutcome::unbounded_column:
            sol.status = LpStatus::unbounded;
            return sol;
        case RunOutcome::aux_left_basis:
            throw lp_error("simplex: unexpected watch label in phase 2");
        case RunOutcome::reached_optimum:
            break;
    }

    // read the vertex back in original variables
    std::vector<double> y(static_cast<std::size_t>(ncols), 0.0);
    for (int i = 0; i < m; ++i) {
        int label = t.basic[static_cast<std::size_t>(i)];
        if (label < ncols)
            y[static_cast<std::size_t>(label)] =
                std::max(t.rhs[static_cast<std::size_t>(i)], 0.0);
    }

    // Refine the vertex against the pristine data: the final basis pins the
    // tight rows (nonbasic slacks) and the basic decision columns; solving
    // that square system discards the roundoff accumulated over the pivots.
    // Falls back to the tableau values when the system is not square (stuck
    // auxiliary) or near-singular.
    {
        std::vector<int> unknowns;
        for (int i = 0; i < m; ++i) {
            int label = t.basic[static_cast<std::size_t>(i)];
            if (label < ncols) unknowns.push_back(label);
        }
        std::vector<int> tight;
        for (int j = 0; j < t.cols; ++j) {
            int label = t.nonbasic[static_cast<std::size_t>(j)];
            if (label >= ncols && label < ncols + m) tight.push_back(label - ncols);
        }
        const std::size_t k = unknowns.size();
        if (k > 0 && tight.size() == k) {
            std::sort(unknowns.begin(), unknowns.end());
            std::sort(tight.begin(), tight.end());
            std::vector<int> col_of(static_cast<std::size_t>(ncols), -1);
            for (std::size_t q = 0; q < k; ++q)
                col_of[static_cast<std::size_t>(unknowns[q])] = static_cast<int>(q);

            std::vector<double> dense(static_cast<std::size_t>(ncols));
            std::vector<double> a(k * k);
            std::vector<double> b(k);
            for (std::size_t r = 0; r < k; ++r) {
                b[r] = fill_row(tight[r], dense.data());
                for (int j = 0; j < ncols; ++j)
                    if (col_of[static_cast<std::size_t>(j)] >= 0)
                        a[r * k + static_cast<std::size_t>(col_of[static_cast<std::size_t>(j)])] =
                            dense[static_cast<std::size_t>(j)];
                    // nonbasic decision columns sit at zero and drop out
            }

            bool ok = true;
            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = i;
            for (std::size_t col = 0; col < k && ok; ++col) {
                std::size_t piv = col;
                for (std::size_t r = col + 1; r < k; ++r)
                    if (std::fabs(a[perm[r] * k + col]) > std::fabs(a[perm[piv] * k + col]))
                        piv = r;
                if (std::fabs(a[perm[piv] * k + col]) < 1e-11) {
                    ok = false;
                    break;
                }
                std::swap(perm[piv], perm[col]);
                for (std::size_t r = 0; r < k; ++r) {
                    if (r == col) continue;
                    double f = a[perm[r] * k + col] / a[perm[col] * k + col];
                    if (f == 0.0) continue;
                    for (std::size_t cc = col; cc < k; ++cc)
                        a[perm[r] * k + cc] -= f * a[perm[col] * k + cc];
                    b[perm[r]] -= f * b[perm[col]];
                }
            }
            if (ok) {
                std::vector<double> refined(k);
                for (std::size_t q = 0; q < k; ++q) {
                    refined[q] = b[perm[q]] / a[perm[q] * k + q];
                    if (!std::isfinite(refined[q])) ok = false;
                }
                if (ok)
                    for (std::size_t q = 0; q < k; ++q)
                        y[static_cast<std::size_t>(unknowns[q])] = std::max(refined[q], 0.0);
            }
            // !ok leaves the unrefined values in place; the audit below decides
        }
    }
    sol.assignment.resize(static_cast<std::size_t>(lp.num_vars));
    for (int j = 0; j < lp.num_vars; ++j) {
        double x = y[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(j)])];
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            x -= y[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])];
        sol.assignment[static_cast<std::size_t>(j)] = x;
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < lp.num_vars; ++j)
        sol.objective_value +=
            lp.objective[static_cast<std::size_t>(j)] * sol.assignment[static_cast<std::size_t>(j)];
    sol.status = LpStatus::optimal;

    // audit the vertex against the original constraints; drift past the
    // feasibility tolerance is a solver failure, not a result
    double worst = 0.0;
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (const auto& [j, aij] : c.coeffs) lhs += aij * sol.assignment[static_cast<std::size_t>(j)];
        double viol = 0.0;
        switch (c.relation) {
            case LinearConstraint::Relation::less_equal: viol = lhs - c.rhs; break;
            case LinearConstraint::Relation::greater_equal: viol = c.rhs - lhs; break;
            case LinearConstraint::Relation::equal: viol = std::fabs(lhs - c.rhs); break;
        }
        worst = std::max(worst, viol);
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        double x = sol.assignment[static_cast<std::size_t>(j)];
        if (lp.lower[static_cast<std::size_t>(j)] == 0.0) worst = std::max(worst, -x);
        if (lp.upper[static_cast<std::size_t>(j)] != kInf)
            worst = std::max(worst, x - lp.upper[static_cast<std::size_t>(j)]);
    }
    if (worst > opts.feasibility_tol)
        throw lp_error("simplex: optimal vertex violates constraints by " +
                       std::to_string(worst));

    return sol;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string term_sum(const std::vector<std::pair<int, double>>& coeffs,
                     const std::vector<std::string>& names) {
    std::string s;
    for (const auto& [j, a] : coeffs) {
        if (!s.empty()) s += (a < 0.0) ? " - " : " + ";
        else if (a < 0.0) s += "-";
        std::string nm = names.empty() ? ("x" + std::to_string(j))
                                       : names[static_cast<std::size_t>(j)];
        s += fmt(std::fabs(a)) + "*" + nm;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string dump_lp(const LinearProgram& lp, const std::vector<std::string>& var_names) {
    std::ostringstream os;
    std::vector<std::pair<int, double>> obj;
    for (int j = 0; j < lp.num_vars; ++j)
        if (lp.objective[static_cast<std::size_t>(j)] != 0.0)
            obj.emplace_back(j, lp.objective[static_cast<std::size_t>(j)]);
    os << "max: " << term_sum(obj, var_names) << "\n";
    for (int j = 0; j < lp.num_vars; ++j) {
        std::string nm = var_names.empty() ? ("x" + std::to_string(j))
                                           : var_names[static_cast<std::size_t>(j)];
        os << nm;
        if (lp.lower[static_cast<std::size_t>(j)] == 0.0) os << " >= 0";
        else os << " free";
        if (lp.upper[static_cast<std::size_t>(j)] != LinearProgram::infinity())
            os << ", " << nm << " <= " << fmt(lp.upper[static_cast<std::size_t>(j)]);
        os << "\n";
    }
    for (const auto& c : lp.constraints) {
        const char* rel = c.relation == LinearConstraint::Relation::less_equal ? "<="
                          : c.relation == LinearConstraint::Relation::greater_equal ? ">="
                                                                                    : "=";
        os << term_sum(c.coeffs, var_names) << " " << rel << " " << fmt(c.rhs) << "\n";
    }
    return os.str();
}

}  // namespace revmax
