#include "qchrom/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qchrom {

namespace {

struct Tableau {
    int m, ncols;  // constraint rows, structural + artificial columns
    std::vector<double> t;    // (m+1) x (ncols+1); last row = reduced costs,
                              // last column = rhs / objective
    std::vector<int> basis;   // basic column per row

    double& at(int i, int j) { return t[static_cast<std::size_t>(i) * (ncols + 1) + j]; }
    double at(int i, int j) const { return t[static_cast<std::size_t>(i) * (ncols + 1) + j]; }
    double& rhs(int i) { return at(i, ncols); }
    double& red(int j) { return at(m, j); }

    void pivot(int pr, int pc) {
        const double piv = at(pr, pc);
        for (int j = 0; j <= ncols; ++j) at(pr, j) /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) at(i, j) -= f * at(pr, j);
            at(i, pc) = 0.0;
        }
        basis[pr] = pc;
    }
};

}  // namespace

LpResult solve_lp_feasibility(const LpProblem& p, const LpOptions& opts) {
    const int m = static_cast<int>(p.rows.size());
    LpResult res;
    if (m == 0) {
        res.status = LpStatus::Feasible;
        res.x.assign(p.nvars, 0.0);
        return res;
    }
    if (static_cast<int>(p.rhs.size()) != m ||
        static_cast<int>(p.nonneg.size()) != p.nvars)
        throw std::invalid_argument("solve_lp_feasibility: shape mismatch");

    // Column layout: nonneg var -> one column; free var -> (+,-) pair.
    std::vector<int> col_of_var(p.nvars);
    int nstruct = 0;
    for (int j = 0; j < p.nvars; ++j) {
        col_of_var[j] = nstruct;
        nstruct += p.nonneg[j] ? 1 : 2;
    }

    Tableau tab;
    tab.m = m;
    tab.ncols = nstruct + m;
    tab.t.assign(static_cast<std::size_t>(m + 1) * (tab.ncols + 1), 0.0);
    tab.basis.resize(m);

    double bscale = 1.0;
    for (double b : p.rhs) bscale = std::max(bscale, std::fabs(b));

    std::vector<double> flip(m, 1.0);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(p.rows[i].size()) != p.nvars)
            throw std::invalid_argument("solve_lp_feasibility: row length");
        flip[i] = p.rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < p.nvars; ++j) {
            const double a = flip[i] * p.rows[i][j];
            tab.at(i, col_of_var[j]) = a;
            if (!p.nonneg[j]) tab.at(i, col_of_var[j] + 1) = -a;
        }
        tab.at(i, nstruct + i) = 1.0;  // artificial
        tab.rhs(i) = flip[i] * p.rhs[i];
        tab.basis[i] = nstruct + i;
    }
    // Phase-1 reduced costs: d_j = -sum_i a_ij for structural columns.
    for (int j = 0; j < nstruct; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += tab.at(i, j);
        tab.red(j) = -s;
    }
    double obj = 0.0;
    for (int i = 0; i < m; ++i) obj += tab.rhs(i);
    tab.at(m, tab.ncols) = obj;

    const double enter_tol = 1e-9;
    const double pivot_tol = 1e-11;
    long pivots = 0;
    long stall = 0;
    double last_obj = obj;
    bool bland = false;

    while (pivots < opts.max_pivots) {
        // entering column
        int pc = -1;
        if (bland) {
            for (int j = 0; j < tab.ncols; ++j)
                if (tab.red(j) < -enter_tol) {
                    pc = j;
                    break;
                }
        } else {
            double best = -enter_tol;
            for (int j = 0; j < tab.ncols; ++j)
                if (tab.red(j) < best) {
                    best = tab.red(j);
                    pc = j;
                }
        }
        if (pc < 0) break;  // optimal

        // ratio test; ties break on lowest basis index (Bland-compatible)
        int pr = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            const double a = tab.at(i, pc);
            if (a <= pivot_tol) continue;
            const double ratio = tab.rhs(i) / a;
            if (pr < 0 || ratio < best_ratio - 1e-15 ||
                (ratio <= best_ratio + 1e-15 && tab.basis[i] < tab.basis[pr])) {
                pr = i;
                best_ratio = ratio;
            }
        }
        if (pr < 0) {
            // Phase-1 objective is bounded below by zero, so an unbounded
            // ray here means numerical trouble.
            res.status = LpStatus::Undecided;
            return res;
        }
        tab.pivot(pr, pc);
        ++pivots;

        const double cur = tab.at(m, tab.ncols);
        if (cur > last_obj - 1e-13 * bscale) {
            if (++stall > 100) bland = true;
        } else {
            stall = 0;
        }
        last_obj = cur;
    }
    if (pivots >= opts.max_pivots) {
        res.status = LpStatus::Undecided;
        return res;
    }

    const double zstar = tab.at(m, tab.ncols);
    if (zstar <= opts.tol * bscale * 10.0) {
        // Feasible: read structural basics.
        std::vector<double> colval(tab.ncols, 0.0);
        for (int i = 0; i < m; ++i) colval[tab.basis[i]] = tab.rhs(i);
        res.x.assign(p.nvars, 0.0);
        for (int j = 0; j < p.nvars; ++j) {
            res.x[j] = colval[col_of_var[j]];
            if (!p.nonneg[j]) res.x[j] -= colval[col_of_var[j] + 1];
        }
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            double s = -p.rhs[i];
            for (int j = 0; j < p.nvars; ++j) s += p.rows[i][j] * res.x[j];
            worst = std::max(worst, std::fabs(s));
        }
        res.residual = worst;
        if (worst <= opts.tol * bscale * 100.0) {
            res.status = LpStatus::Feasible;
        } else {
            res.status = LpStatus::Undecided;
        }
        return res;
    }

    // Infeasible by simplex; extract the Farkas vector from the reduced
    // costs of the artificial columns (y_i = 1 - d_i), undo the row flips,
    // and re-verify by direct arithmetic.
    std::vector<double> y(m);
    for (int i = 0; i < m; ++i) y[i] = flip[i] * (1.0 - tab.red(nstruct + i));

    double ytb = 0.0;
    for (int i = 0; i < m; ++i) ytb += y[i] * p.rhs[i];
    double worst_dir = 0.0;  // max over columns of allowed violation
    for (int j = 0; j < p.nvars; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += y[i] * p.rows[i][j];
        if (p.nonneg[j])
            worst_dir = std::max(worst_dir, s);  // need y^T A_j <= 0
        else
            worst_dir = std::max(worst_dir, std::fabs(s));
    }
    double ynorm = 0.0;
    for (double v : y) ynorm = std::max(ynorm, std::fabs(v));
    ynorm = std::max(ynorm, 1.0);
    if (ytb >= opts.tol * ynorm && worst_dir <= opts.tol * ynorm * 10.0) {
        res.status = LpStatus::Infeasible;
        res.farkas = y;
        res.certificate_margin = ytb;
    } else {
        res.status = LpStatus::Undecided;
    }
    return res;
}

}  // namespace qchrom
