#ifndef QCHROM_LP_HPP
#define QCHROM_LP_HPP

#include <vector>

namespace qchrom {

/// Equality-constrained feasibility system: A x = b with x_i >= 0 for the
/// flagged variables and the rest free.
struct LpProblem {
    int nvars = 0;
    std::vector<std::vector<double>> rows;  // each of length nvars
    std::vector<double> rhs;
    std::vector<bool> nonneg;               // length nvars
};

enum class LpStatus { Feasible, Infeasible, Undecided };

struct LpResult {
    LpStatus status = LpStatus::Undecided;
    std::vector<double> x;       // feasible point, when Feasible
    std::vector<double> farkas;  // dual vector y, when Infeasible:
                                 // y^T A <= 0 on nonneg vars, = 0 on free vars,
                                 // y^T b > 0
    double residual = 0.0;       // max |Ax - b| of the returned point
    double certificate_margin = 0.0;  // y^T b for the certificate
};

struct LpOptions {
    double tol = 1e-9;
    long max_pivots = 200000;
};

/// Phase-1 simplex. Feasible points satisfy max |Ax-b| <= tol * scale;
/// infeasibility comes with a Farkas certificate that is re-verified by
/// direct arithmetic before it is reported.
LpResult solve_lp_feasibility(const LpProblem& p, const LpOptions& opts = {});

}  // namespace qchrom

#endif
