#include "qchrom/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qchrom/kernels.hpp"

namespace qchrom {

namespace {

double max_offdiag(const std::vector<double>& a, int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m = std::max(m, std::fabs(a[static_cast<std::size_t>(i) * n + j]));
    return m;
}

}  // namespace

EigenSym sym_eigen(const SymMatrix& m) {
    const int n = m.dim();
    EigenSym r;
    r.vectors = Mat(n, n);
    if (n == 0) return r;

    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double tol = 1e-12 * std::max(m.frob_norm(), 1e-300);
    auto A = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    auto V = [&](int i, int j) -> double& {
        return v[static_cast<std::size_t>(i) * n + j];
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (max_offdiag(a, n) <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::fabs(apq) <= tol * 1e-3) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = A(k, p), akq = A(k, q);
                        A(k, p) = A(p, k) = akp - s * (akq + tau * akp);
                        A(k, q) = A(q, k) = akq + s * (akp - tau * akq);
                    }
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = vkp - s * (vkq + tau * vkp);
                    V(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] >
               a[static_cast<std::size_t>(y) * n + y];
    });
    r.values.resize(n);
    for (int k = 0; k < n; ++k) {
        r.values[k] = a[static_cast<std::size_t>(order[k]) * n + order[k]];
        for (int i = 0; i < n; ++i) r.vectors.at(i, k) = V(i, order[k]);
    }
    return r;
}

SymMatrix psd_project(const SymMatrix& m) {
    const int n = m.dim();
    EigenSym e = sym_eigen(m);
    bool any_negative = false;
    for (double lam : e.values)
        if (lam < 0.0) {
            any_negative = true;
            break;
        }
    if (!any_negative) return m;
    std::vector<double> d(n);
    for (int k = 0; k < n; ++k) d[k] = std::max(e.values[k], 0.0);
    SymMatrix out(n);
    kernels::reconstruct(e.vectors.a.data(), d.data(), out.raw().data(), n);
    return out;
}

double min_eigenvalue(const SymMatrix& m) {
    if (m.dim() == 0) return 0.0;
    EigenSym e = sym_eigen(m);
    return e.values.back();
}

}  // namespace qchrom
