#include "qchrom/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qchrom/eigen.hpp"
#include "qchrom/kernels.hpp"
#include "qchrom/lp.hpp"

namespace qchrom {

namespace {

// <sym(a), R sym(b) R>_F for unit-value entries times v_a * v_b, where
// sym(i,j) denotes the symmetric matrix with value v at (i,j) and (j,i).
double pair_inner(const SparseSymEntry& a, const SparseSymEntry& b, const Mat& R) {
    auto r = [&](int x, int y) { return R.at(x, y); };
    double s;
    if (a.i == a.j && b.i == b.j)
        s = r(a.i, b.i) * r(a.i, b.i);
    else if (a.i == a.j)
        s = 2.0 * r(a.i, b.i) * r(a.i, b.j);
    else if (b.i == b.j)
        s = 2.0 * r(a.i, b.i) * r(a.j, b.i);
    else
        s = 2.0 * (r(a.j, b.i) * r(a.i, b.j) + r(a.j, b.j) * r(a.i, b.i));
    return a.v * b.v * s;
}

struct ConeWorkspace {
    const ConeProgram& prog;
    int d;       // psd dim
    int fd;      // full dim
    int naux;
    int m;
    bool congruent;
    Mat R;                       // full x full, W W^T or identity
    SymMatrix Cred;              // reduced objective matrix
    std::vector<double> caux;
    double cnorm;
    std::vector<double> rownorm;
    std::vector<double> bhat;    // rhs / rownorm
    std::vector<double> chol;    // m x m factor
    // scratch
    Mat T1, T2;                  // full x d products
    SymMatrix Qfull;

    explicit ConeWorkspace(const ConeProgram& p)
        : prog(p),
          d(p.psd_dim),
          fd(p.full_dim),
          naux(p.naux_nonneg + p.naux_free),
          m(static_cast<int>(p.rows.size())),
          congruent(p.W.has_value()),
          R(p.full_dim, p.full_dim),
          Cred(p.psd_dim),
          Qfull(p.full_dim) {
        if (congruent) {
            const Mat& W = *p.W;
            if (W.rows != fd || W.cols != d)
                throw std::invalid_argument("congruence basis shape");
            kernels::matmul(W.a.data(), transpose(W).a.data(), R.a.data(), fd, d, fd);
        } else {
            if (fd != d) throw std::invalid_argument("full_dim != psd_dim without W");
            for (int i = 0; i < fd; ++i) R.at(i, i) = 1.0;
        }
        T1 = Mat(fd, d);
        T2 = Mat(fd, fd);

        // reduced objective
        SymMatrix Cfull(fd);
        for (const auto& e : prog.obj_mat) Cfull.set(e.i, e.j, Cfull.at(e.i, e.j) + e.v);
        Cred = reduce(Cfull);
        caux = prog.obj_aux;
        caux.resize(naux, 0.0);
        double cn = frob_inner(Cred, Cred);
        for (double v : caux) cn += v * v;
        cnorm = std::sqrt(cn);
    }

    static Mat transpose(const Mat& a) {
        Mat t(a.cols, a.rows);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
        return t;
    }

    SymMatrix reduce(const SymMatrix& full) {
        if (!congruent) return full;
        const Mat& W = *prog.W;
        // T1 = full * W ; red = W^T * T1
        kernels::matmul(full.data().data(), W.a.data(), T1.a.data(), fd, fd, d);
        Mat red(d, d);
        kernels::matmul(transpose(W).a.data(), T1.a.data(), red.a.data(), d, fd, d);
        return SymMatrix::from_full(d, red.a);
    }

    // Q = W X W^T in the ambient space.
    void expand(const SymMatrix& X, SymMatrix& out) {
        if (!congruent) {
            out = X;
            return;
        }
        const Mat& W = *prog.W;
        Mat WX(fd, d);
        kernels::matmul(W.a.data(), X.data().data(), WX.a.data(), fd, d, d);
        kernels::matmul(WX.a.data(), transpose(W).a.data(), T2.a.data(), fd, d, fd);
        out = SymMatrix::from_full(fd, T2.a);
    }

    double row_mat_value(const ConeRow& row, const SymMatrix& Qf) const {
        double s = 0.0;
        for (const auto& e : row.mat)
            s += (e.i == e.j ? 1.0 : 2.0) * e.v * Qf.at(e.i, e.j);
        return s;
    }

    // scaled A(u), writing into out (size m)
    void apply(const SymMatrix& X, const std::vector<double>& w,
               std::vector<double>& out) {
        expand(X, Qfull);
        for (int k = 0; k < m; ++k) {
            const ConeRow& row = prog.rows[k];
            double s = row_mat_value(row, Qfull);
            for (auto [idx, c] : row.aux) s += c * w[idx];
            out[k] = s / rownorm[k];
        }
    }

    // (mat, aux) += A^*(yhat) with scaled rows
    void adjoint(const std::vector<double>& yhat, SymMatrix& mat,
                 std::vector<double>& aux) {
        SymMatrix Yfull(fd);
        std::fill(aux.begin(), aux.end(), 0.0);
        for (int k = 0; k < m; ++k) {
            const double c = yhat[k] / rownorm[k];
            if (c == 0.0) continue;
            const ConeRow& row = prog.rows[k];
            for (const auto& e : row.mat)
                Yfull.set(e.i, e.j, Yfull.at(e.i, e.j) + c * e.v);
            for (auto [idx, co] : row.aux) aux[idx] += co * c;
        }
        mat = reduce(Yfull);
    }
};

}  // namespace

std::optional<std::vector<int>> prune_dependent_rows(
    const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs,
    double tol, std::vector<double>* certificate) {
    const int m = static_cast<int>(rows.size());
    std::vector<int> kept;
    std::vector<std::vector<double>> basis;       // orthonormal
    std::vector<std::vector<double>> expand_coef; // basis vector -> kept-row coefficients
    for (int r = 0; r < m; ++r) {
        std::vector<double> v = rows[r];
        const std::size_t len = v.size();
        double orig_norm = std::sqrt(kernels::dot(v.data(), v.data(), len));
        std::vector<double> alpha(kept.size(), 0.0);  // coefficients on kept rows
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t l = 0; l < basis.size(); ++l) {
                double c = kernels::dot(v.data(), basis[l].data(), len);
                if (c == 0.0) continue;
                kernels::axpy(-c, basis[l].data(), v.data(), len);
                for (std::size_t j = 0; j < kept.size(); ++j)
                    alpha[j] += c * expand_coef[l][j];
            }
        }
        double rem = std::sqrt(kernels::dot(v.data(), v.data(), len));
        if (rem > tol * std::max(orig_norm, 1.0)) {
            // independent: normalise and record expansion
            std::vector<double> coef(kept.size() + 1, 0.0);
            // basis_new = (row_r - sum alpha_j row_kept_j) / rem
            for (std::size_t j = 0; j < kept.size(); ++j) coef[j] = -alpha[j] / rem;
            coef[kept.size()] = 1.0 / rem;
            kept.push_back(r);
            for (auto& x : v) x /= rem;
            basis.push_back(std::move(v));
            for (auto& ec : expand_coef) ec.resize(kept.size(), 0.0);
            expand_coef.push_back(std::move(coef));
        } else {
            // dependent: row_r = sum alpha_j row_kept_j; check rhs consistency
            double implied = 0.0;
            double scale = 1.0;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                implied += alpha[j] * rhs[kept[j]];
                scale = std::max(scale, std::fabs(alpha[j] * rhs[kept[j]]));
            }
            if (std::fabs(rhs[r] - implied) > 1e3 * tol * scale) {
                if (certificate) {
                    certificate->assign(m, 0.0);
                    (*certificate)[r] = 1.0;
                    for (std::size_t j = 0; j < kept.size(); ++j)
                        (*certificate)[kept[j]] = -alpha[j];
                    if (rhs[r] - implied < 0)
                        for (auto& x : *certificate) x = -x;
                }
                return std::nullopt;
            }
        }
    }
    return kept;
}

ConeResult solve_cone(const ConeProgram& prog, const SdpOptions& opts) {
    ConeResult res;
    if (prog.rows.empty() || prog.psd_dim <= 0) {
        res.status = ConeStatus::BadRows;
        return res;
    }
    ConeWorkspace ws(prog);
    const int m = ws.m, d = ws.d, naux = ws.naux;
    const int nfree_from = prog.naux_nonneg;

    // row norms from the diagonal of A A^T
    ws.rownorm.assign(m, 1.0);
    ws.bhat.assign(m, 0.0);
    std::vector<double> aat(static_cast<std::size_t>(m) * m, 0.0);
    for (int k = 0; k < m; ++k) {
        const auto& rk = prog.rows[k];
        for (int l = k; l < m; ++l) {
            const auto& rl = prog.rows[l];
            double s = 0.0;
            for (const auto& ea : rk.mat)
                for (const auto& eb : rl.mat) s += pair_inner(ea, eb, ws.R);
            for (auto [ia, ca] : rk.aux)
                for (auto [ib, cb] : rl.aux)
                    if (ia == ib) s += ca * cb;
            aat[static_cast<std::size_t>(k) * m + l] = s;
            aat[static_cast<std::size_t>(l) * m + k] = s;
        }
    }
    for (int k = 0; k < m; ++k) {
        double nk = aat[static_cast<std::size_t>(k) * m + k];
        if (nk <= 1e-24) {
            res.status = ConeStatus::BadRows;  // zero row slipped through
            return res;
        }
        ws.rownorm[k] = std::sqrt(nk);
        ws.bhat[k] = prog.rows[k].rhs / ws.rownorm[k];
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            aat[static_cast<std::size_t>(k) * m + l] /= ws.rownorm[k] * ws.rownorm[l];

    ws.chol = aat;
    if (!kernels::cholesky(ws.chol.data(), m, 1e-13)) {
        // mild ridge for near-dependent rows
        ws.chol = aat;
        for (int k = 0; k < m; ++k) ws.chol[static_cast<std::size_t>(k) * m + k] += 1e-10;
        if (!kernels::cholesky(ws.chol.data(), m, 1e-14)) {
            res.status = ConeStatus::BadRows;
            return res;
        }
    }

    const double bnorm = std::sqrt(kernels::dot(ws.bhat.data(), ws.bhat.data(), m));

    SymMatrix X(d), Smat(d), hyMat(d), Vmat(d);
    std::vector<double> w(naux, 0.0), Sw(naux, 0.0), hyAux(naux, 0.0), Vw(naux, 0.0);
    std::vector<double> y(m, 0.0), Au(m, 0.0), rhs(m), ACS(m), AC(m);

    ws.apply(ws.Cred, ws.caux, AC);  // A applied to the objective element

    double mu = opts.mu0;
    const double alpha = opts.relax;
    int it = 0;
    double pres_raw = 0.0, pres_rel = 0.0, dres = 0.0, gap = 0.0;
    double pobj = 0.0, dobj = 0.0;

    for (it = 0; it < opts.max_iter; ++it) {
        // residuals of the current iterate
        pres_raw = 0.0;
        double pr2 = 0.0;
        for (int k = 0; k < m; ++k) {
            double raw = (Au[k] - ws.bhat[k]) * ws.rownorm[k];
            pres_raw = std::max(pres_raw, std::fabs(raw));
            double sc = Au[k] - ws.bhat[k];
            pr2 += sc * sc;
        }
        pres_rel = std::sqrt(pr2) / (1.0 + bnorm);

        double dn2 = 0.0;
        for (std::size_t i = 0; i < ws.Cred.data().size(); ++i) {
            double v = hyMat.data()[i] + Smat.data()[i] - ws.Cred.data()[i];
            dn2 += v * v;
        }
        for (int i = 0; i < naux; ++i) {
            double v = hyAux[i] + Sw[i] - ws.caux[i];
            dn2 += v * v;
        }
        dres = std::sqrt(dn2) / (1.0 + ws.cnorm);

        pobj = frob_inner(ws.Cred, X);
        for (int i = 0; i < naux; ++i) pobj += ws.caux[i] * w[i];
        dobj = kernels::dot(ws.bhat.data(), y.data(), m);
        gap = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));

        if (pres_raw <= opts.eps_feas && dres <= opts.eps_gap && gap <= opts.eps_gap) {
            res.status = ConeStatus::Optimal;
            break;
        }

        // y-step
        ws.apply(Smat, Sw, ACS);
        for (int k = 0; k < m; ++k)
            rhs[k] = mu * (ws.bhat[k] - Au[k]) + AC[k] - ACS[k];
        kernels::chol_solve(ws.chol.data(), rhs.data(), y.data(), m);
        ws.adjoint(y, hyMat, hyAux);

        // relaxed V = C - (alpha*hy + (1-alpha)(C - S)) - mu*u
        for (std::size_t i = 0; i < Vmat.raw().size(); ++i) {
            double cred = ws.Cred.data()[i];
            double h = alpha * hyMat.data()[i] + (1.0 - alpha) * (cred - Smat.data()[i]);
            Vmat.raw()[i] = cred - h - mu * X.data()[i];
        }
        for (int i = 0; i < naux; ++i) {
            double h = alpha * hyAux[i] + (1.0 - alpha) * (ws.caux[i] - Sw[i]);
            Vw[i] = ws.caux[i] - h - mu * w[i];
        }

        // S = projection of V onto the dual cone; u = (S - V)/mu
        Smat = psd_project(Vmat);
        for (int i = 0; i < naux; ++i)
            Sw[i] = (i < nfree_from) ? std::max(Vw[i], 0.0) : 0.0;
        for (std::size_t i = 0; i < X.raw().size(); ++i)
            X.raw()[i] = (Smat.data()[i] - Vmat.data()[i]) / mu;
        for (int i = 0; i < naux; ++i) w[i] = (Sw[i] - Vw[i]) / mu;

        ws.apply(X, w, Au);

        if ((it + 1) % 50 == 0) {
            if (pres_rel > 10.0 * dres)
                mu = std::min(mu * 2.0, 1e8);
            else if (dres > 10.0 * pres_rel)
                mu = std::max(mu * 0.5, 1e-8);
        }
    }

    res.X = X;
    ws.expand(X, res.Q);
    res.w = w;
    res.y.assign(m, 0.0);
    for (int k = 0; k < m; ++k) res.y[k] = y[k] / ws.rownorm[k];
    res.pobj = pobj;
    res.dobj = dobj;
    res.pres = pres_raw;
    res.dres = dres;
    res.gap = gap;
    res.iters = it;
    if (res.status != ConeStatus::Optimal) res.status = ConeStatus::MaxIter;
    return res;
}

namespace {

std::vector<double> svec(const SymMatrix& a) {
    const int d = a.dim();
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(d) * (d + 1) / 2);
    const double s2 = std::sqrt(2.0);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) v.push_back(i == j ? a.at(i, j) : s2 * a.at(i, j));
    return v;
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts) {
    SdpSolution sol;
    sol.X = SymMatrix(p.dim);
    if (p.dim <= 0) return sol;

    // Equality system: user constraints plus zero-tagged entries. Dependent
    // consistent rows are dropped; a dependent inconsistent row certifies
    // infeasibility outright.
    std::vector<std::vector<double>> eq_vecs;
    std::vector<double> eq_rhs;
    std::vector<ConeRow> eq_rows;
    for (const auto& [A, b] : p.eq) {
        if (A.dim() != p.dim) throw std::invalid_argument("constraint dim mismatch");
        eq_vecs.push_back(svec(A));
        eq_rhs.push_back(b);
        ConeRow row;
        row.rhs = b;
        for (int i = 0; i < p.dim; ++i)
            for (int j = i; j < p.dim; ++j)
                if (A.at(i, j) != 0.0) row.mat.push_back({i, j, A.at(i, j)});
        eq_rows.push_back(std::move(row));
    }
    for (int i = 0; i < p.dim; ++i)
        for (int j = i; j < p.dim; ++j)
            if (p.tag(i, j) == EntryTag::Zero) {
                SymMatrix E(p.dim);
                E.set(i, j, 1.0);
                eq_vecs.push_back(svec(E));
                eq_rhs.push_back(0.0);
                ConeRow row;
                row.rhs = 0.0;
                row.mat.push_back({i, j, 1.0});
                eq_rows.push_back(std::move(row));
            }

    std::vector<double> cert;
    auto kept = prune_dependent_rows(eq_vecs, eq_rhs, 1e-10, &cert);
    if (!kept) {
        // verify the certificate by direct arithmetic before asserting
        SymMatrix Z(p.dim);
        double ytb = 0.0, ymax = 0.0;
        for (std::size_t k = 0; k < cert.size(); ++k) {
            if (cert[k] == 0.0) continue;
            ymax = std::max(ymax, std::fabs(cert[k]));
            ytb += cert[k] * eq_rhs[k];
            for (const auto& e : eq_rows[k].mat) {
                double v = Z.at(e.i, e.j) + cert[k] * e.v;
                Z.set(e.i, e.j, v);
            }
        }
        if (Z.max_abs() <= 1e-7 * std::max(1.0, ymax) &&
            std::fabs(ytb) > 1e-9 * std::max(1.0, ymax)) {
            sol.status = SdpStatus::Infeasible;
            return sol;
        }
        sol.status = SdpStatus::Undecided;
        return sol;
    }

    ConeProgram prog;
    prog.full_dim = prog.psd_dim = p.dim;
    for (int idx : *kept) prog.rows.push_back(eq_rows[idx]);

    // sign tags via slack variables
    int naux = 0;
    for (int i = 0; i < p.dim; ++i)
        for (int j = i; j < p.dim; ++j) {
            EntryTag t = p.tag(i, j);
            if (t == EntryTag::NonNeg) {
                if (i == j) continue;  // implied by PSD
                ConeRow row;
                row.mat.push_back({i, j, 1.0});
                row.aux.push_back({naux++, -1.0});
                prog.rows.push_back(std::move(row));
            } else if (t == EntryTag::NonPos) {
                ConeRow row;
                row.mat.push_back({i, j, 1.0});
                row.aux.push_back({naux++, 1.0});
                prog.rows.push_back(std::move(row));
            }
        }
    prog.naux_nonneg = naux;

    // minimize -<C,X>
    for (int i = 0; i < p.dim; ++i)
        for (int j = i; j < p.dim; ++j)
            if (p.objective.at(i, j) != 0.0)
                prog.obj_mat.push_back({i, j, -p.objective.at(i, j)});
    prog.obj_aux.assign(naux, 0.0);

    ConeResult cr = solve_cone(prog, opts);
    sol.X = cr.Q;
    sol.iterations = cr.iters;

    // independent re-validation
    sol.objective_value = frob_inner(p.objective, sol.X);
    sol.max_eq_residual = 0.0;
    for (const auto& [A, b] : p.eq)
        sol.max_eq_residual =
            std::max(sol.max_eq_residual, std::fabs(frob_inner(A, sol.X) - b));
    sol.min_eigenvalue = min_eigenvalue(sol.X);
    sol.entry_violation = 0.0;
    for (int i = 0; i < p.dim; ++i)
        for (int j = i; j < p.dim; ++j) {
            double x = sol.X.at(i, j);
            switch (p.tag(i, j)) {
                case EntryTag::Zero:
                    sol.entry_violation = std::max(sol.entry_violation, std::fabs(x));
                    break;
                case EntryTag::NonNeg:
                    sol.entry_violation = std::max(sol.entry_violation, -x);
                    break;
                case EntryTag::NonPos:
                    sol.entry_violation = std::max(sol.entry_violation, x);
                    break;
                default:
                    break;
            }
        }

    if (cr.status == ConeStatus::Optimal && sol.max_eq_residual <= opts.eps_feas &&
        sol.min_eigenvalue >= -opts.eps_psd && sol.entry_violation <= opts.eps_feas) {
        sol.status = SdpStatus::Optimal;
        return sol;
    }

    // The alternating scheme did not settle: a linear relaxation can still
    // certify infeasibility (it ignores positive semidefiniteness).
    if (p.dim <= 60) {
        LpProblem lp;
        const int nv = p.dim * (p.dim + 1) / 2;
        lp.nvars = nv;
        lp.nonneg.assign(nv, false);
        std::vector<double> flip(nv, 1.0);
        auto vidx = [&](int i, int j) {
            return i * p.dim - i * (i - 1) / 2 + (j - i);
        };
        for (int i = 0; i < p.dim; ++i)
            for (int j = i; j < p.dim; ++j) {
                EntryTag t = p.tag(i, j);
                int v = vidx(i, j);
                if (t == EntryTag::NonNeg) lp.nonneg[v] = true;
                if (t == EntryTag::NonPos) {
                    lp.nonneg[v] = true;
                    flip[v] = -1.0;
                }
            }
        for (std::size_t k = 0; k < eq_rows.size(); ++k) {
            std::vector<double> row(nv, 0.0);
            for (const auto& e : eq_rows[k].mat)
                row[vidx(e.i, e.j)] = (e.i == e.j ? 1.0 : 2.0) * e.v * flip[vidx(e.i, e.j)];
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(eq_rows[k].rhs);
        }
        LpResult lr = solve_lp_feasibility(lp);
        if (lr.status == LpStatus::Infeasible) {
            sol.status = SdpStatus::Infeasible;
            return sol;
        }
    }
    sol.status = SdpStatus::Undecided;
    return sol;
}

}  // namespace qchrom
