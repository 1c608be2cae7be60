#include "qchrom/theta.hpp"

#include <algorithm>
#include <cmath>

#include "qchrom/eigen.hpp"

namespace qchrom {

ThetaResult theta(const Graph& g, ThetaVariant variant, const SdpOptions& opts) {
    const int n = g.n();
    ThetaResult res;
    res.variant = variant;
    res.witness = SymMatrix(n);
    if (n == 0) return res;

    ConeProgram prog;
    prog.full_dim = prog.psd_dim = n;

    ConeRow trace;
    trace.rhs = 1.0;
    for (int i = 0; i < n; ++i) trace.mat.push_back({i, i, 1.0});
    prog.rows.push_back(std::move(trace));

    int naux = 0;
    for (auto [u, v] : g.edges()) {
        ConeRow row;
        row.mat.push_back({u, v, 1.0});
        if (variant == ThetaVariant::Plus)
            row.aux.push_back({naux++, 1.0});  // X_uv + s = 0, s >= 0
        prog.rows.push_back(std::move(row));
    }
    if (variant == ThetaVariant::Minus) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;  // already forced to zero
                ConeRow row;
                row.mat.push_back({u, v, 1.0});
                row.aux.push_back({naux++, -1.0});  // X_uv >= 0
                prog.rows.push_back(std::move(row));
            }
    }
    prog.naux_nonneg = naux;
    prog.obj_aux.assign(naux, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) prog.obj_mat.push_back({i, j, -1.0});

    ConeResult cr = solve_cone(prog, opts);
    res.witness = cr.Q;

    // value and constraint check recomputed from the witness
    double value = 0.0;
    for (double x : cr.Q.data()) value += x;
    res.value = value;

    double viol = std::fabs(frob_inner(SymMatrix::identity(n), cr.Q) - 1.0);
    for (auto [u, v] : g.edges()) {
        double x = cr.Q.at(u, v);
        viol = std::max(viol, variant == ThetaVariant::Plus ? std::max(0.0, x)
                                                            : std::fabs(x));
    }
    if (variant == ThetaVariant::Minus)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                viol = std::max(viol, -cr.Q.at(u, v));
    res.max_constraint_violation = viol;

    const double psd_ok = min_eigenvalue(cr.Q);
    if (cr.status == ConeStatus::Optimal && viol <= 10.0 * opts.eps_feas &&
        psd_ok >= -opts.eps_psd)
        res.status = SdpStatus::Optimal;
    else
        res.status = SdpStatus::Undecided;
    return res;
}

}  // namespace qchrom
