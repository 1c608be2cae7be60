#include "qchrom/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace qchrom::kernels {

namespace {

bool initial_parallel() {
#ifdef _OPENMP
    if (const char* env = std::getenv("QCHROM_SERIAL"))
        return env[0] == '0';
    return true;
#else
    return false;
#endif
}

std::atomic<bool> g_parallel{initial_parallel()};

// Below these sizes the fork/join overhead dominates.
constexpr int kMatCutoff = 48;
constexpr std::size_t kVecCutoff = 1 << 14;

}  // namespace

void set_parallel_enabled(bool on) {
#ifdef _OPENMP
    g_parallel.store(on);
#else
    (void)on;
#endif
}

bool parallel_enabled() { return g_parallel.load(); }

void matmul(const double* A, const double* B, double* C, int n, int k, int m) {
    if (parallel_enabled() && n >= kMatCutoff)
        omp::matmul(A, B, C, n, k, m);
    else
        serial::matmul(A, B, C, n, k, m);
}

void reconstruct(const double* V, const double* d, double* out, int n) {
    if (parallel_enabled() && n >= kMatCutoff)
        omp::reconstruct(V, d, out, n);
    else
        serial::reconstruct(V, d, out, n);
}

double dot(const double* x, const double* y, std::size_t len) {
    if (parallel_enabled() && len >= kVecCutoff) return omp::dot(x, y, len);
    return serial::dot(x, y, len);
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
    if (parallel_enabled() && len >= kVecCutoff)
        omp::axpy(alpha, x, y, len);
    else
        serial::axpy(alpha, x, y, len);
}

double max_abs(const double* x, std::size_t len) {
    if (parallel_enabled() && len >= kVecCutoff) return omp::max_abs(x, len);
    return serial::max_abs(x, len);
}

bool cholesky(double* A, int n, double eps) {
    if (parallel_enabled() && n >= 2 * kMatCutoff)
        return omp::cholesky(A, n, eps);
    return serial::cholesky(A, n, eps);
}

void chol_solve(const double* L, const double* b, double* x, int n) {
    // L z = b
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        const double* li = L + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < i; ++j) s -= li[j] * x[j];
        x[i] = s / li[i];
    }
    // L^T x = z
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j)
            s -= L[static_cast<std::size_t>(j) * n + i] * x[j];
        x[i] = s / L[static_cast<std::size_t>(i) * n + i];
    }
}

}  // namespace qchrom::kernels
