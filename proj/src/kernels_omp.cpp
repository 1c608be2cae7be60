#include "qchrom/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qchrom::kernels::omp {

void matmul(const double* A, const double* B, double* C, int n, int k, int m) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double* ci = C + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) ci[j] = 0.0;
        const double* ai = A + static_cast<std::size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const double av = ai[l];
            if (av == 0.0) continue;
            const double* bl = B + static_cast<std::size_t>(l) * m;
            for (int j = 0; j < m; ++j) ci[j] += av * bl[j];
        }
    }
}

void reconstruct(const double* V, const double* d, double* out, int n) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) {
                if (d[l] == 0.0) continue;
                s += d[l] * V[static_cast<std::size_t>(i) * n + l] *
                     V[static_cast<std::size_t>(j) * n + l];
            }
            out[static_cast<std::size_t>(i) * n + j] = s;
            out[static_cast<std::size_t>(j) * n + i] = s;
        }
    }
}

double dot(const double* x, const double* y, std::size_t len) {
    double s = 0.0;
    const long long nn = static_cast<long long>(len);
#pragma omp parallel for reduction(+ : s) schedule(static)
    for (long long i = 0; i < nn; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
    const long long nn = static_cast<long long>(len);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < nn; ++i) y[i] += alpha * x[i];
}

double max_abs(const double* x, std::size_t len) {
    double m = 0.0;
    const long long nn = static_cast<long long>(len);
#pragma omp parallel for reduction(max : m) schedule(static)
    for (long long i = 0; i < nn; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

bool cholesky(double* A, int n, double eps) {
    double scale = 1.0;
    for (int i = 0; i < n; ++i)
        scale = std::max(scale, A[static_cast<std::size_t>(i) * n + i]);
    for (int j = 0; j < n; ++j) {
        double* aj = A + static_cast<std::size_t>(j) * n;
        double pivot = aj[j];
        for (int l = 0; l < j; ++l) pivot -= aj[l] * aj[l];
        if (pivot <= eps * scale) return false;
        const double ljj = std::sqrt(pivot);
        aj[j] = ljj;
        // Column update: rows are independent.
#pragma omp parallel for schedule(static) if (n - j > 64)
        for (int i = j + 1; i < n; ++i) {
            double* ai = A + static_cast<std::size_t>(i) * n;
            double s = ai[j];
            for (int l = 0; l < j; ++l) s -= ai[l] * aj[l];
            ai[j] = s / ljj;
        }
    }
    return true;
}

}  // namespace qchrom::kernels::omp
