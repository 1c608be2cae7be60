#ifndef QCHROM_KERNELS_HPP
#define QCHROM_KERNELS_HPP

#include <cstddef>

// Dense linear-algebra kernels used by the solvers. Each kernel has a serial
// reference implementation and an OpenMP one; the dispatcher picks between
// them at runtime so tests can compare the two paths and the benchmark tool
// can time them side by side.

namespace qchrom::kernels {

void set_parallel_enabled(bool on);
bool parallel_enabled();

/// C = A * B with A (n x k), B (k x m), C (n x m), all row-major.
void matmul(const double* A, const double* B, double* C, int n, int k, int m);

/// out = V * diag(d) * V^T for V (n x n, columns are the basis), symmetric out.
void reconstruct(const double* V, const double* d, double* out, int n);

double dot(const double* x, const double* y, std::size_t len);
void axpy(double alpha, const double* x, double* y, std::size_t len);
double max_abs(const double* x, std::size_t len);

/// In-place lower Cholesky of a dense SPD matrix (row-major). Returns false
/// if a pivot drops below eps * scale.
bool cholesky(double* A, int n, double eps);
void chol_solve(const double* L, const double* b, double* x, int n);

namespace serial {
void matmul(const double* A, const double* B, double* C, int n, int k, int m);
void reconstruct(const double* V, const double* d, double* out, int n);
double dot(const double* x, const double* y, std::size_t len);
void axpy(double alpha, const double* x, double* y, std::size_t len);
double max_abs(const double* x, std::size_t len);
bool cholesky(double* A, int n, double eps);
}  // namespace serial

namespace omp {
void matmul(const double* A, const double* B, double* C, int n, int k, int m);
void reconstruct(const double* V, const double* d, double* out, int n);
double dot(const double* x, const double* y, std::size_t len);
void axpy(double alpha, const double* x, double* y, std::size_t len);
double max_abs(const double* x, std::size_t len);
bool cholesky(double* A, int n, double eps);
}  // namespace omp

}  // namespace qchrom::kernels

#endif
