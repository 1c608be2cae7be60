#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qchrom/kernels.hpp"

using namespace qchrom;

namespace {

std::vector<double> random_vec(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> v(len);
    for (auto& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    return v;
}

}  // namespace

TEST_CASE("parallel kernels agree with serial reference") {
    const int n = 67;  // above the dispatch cutoff
    auto A = random_vec(static_cast<std::size_t>(n) * n, 1);
    auto B = random_vec(static_cast<std::size_t>(n) * n, 2);

    std::vector<double> Cs(A.size()), Cp(A.size());
    kernels::serial::matmul(A.data(), B.data(), Cs.data(), n, n, n);
    kernels::omp::matmul(A.data(), B.data(), Cp.data(), n, n, n);
    for (std::size_t i = 0; i < Cs.size(); ++i)
        CHECK(Cp[i] == doctest::Approx(Cs[i]).epsilon(1e-13));

    auto d = random_vec(n, 3);
    std::vector<double> Rs(A.size()), Rp(A.size());
    kernels::serial::reconstruct(A.data(), d.data(), Rs.data(), n);
    kernels::omp::reconstruct(A.data(), d.data(), Rp.data(), n);
    for (std::size_t i = 0; i < Rs.size(); ++i)
        CHECK(Rp[i] == doctest::Approx(Rs[i]).epsilon(1e-13));

    auto x = random_vec(1 << 15, 4);
    auto y = random_vec(1 << 15, 5);
    double ds = kernels::serial::dot(x.data(), y.data(), x.size());
    double dp = kernels::omp::dot(x.data(), y.data(), x.size());
    CHECK(dp == doctest::Approx(ds).epsilon(1e-12));

    CHECK(kernels::serial::max_abs(x.data(), x.size()) ==
          kernels::omp::max_abs(x.data(), x.size()));

    auto ys = y, yp = y;
    kernels::serial::axpy(0.7, x.data(), ys.data(), x.size());
    kernels::omp::axpy(0.7, x.data(), yp.data(), x.size());
    for (std::size_t i = 0; i < ys.size(); ++i) CHECK(ys[i] == yp[i]);
}

TEST_CASE("cholesky solves SPD systems") {
    const int n = 40;
    auto M = random_vec(static_cast<std::size_t>(n) * n, 9);
    // A = M M^T + n I is SPD.
    std::vector<double> A(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = (i == j) ? n : 0.0;
            for (int k = 0; k < n; ++k)
                s += M[static_cast<std::size_t>(i) * n + k] *
                     M[static_cast<std::size_t>(j) * n + k];
            A[static_cast<std::size_t>(i) * n + j] = s;
        }
    auto b = random_vec(n, 10);

    auto As = A, Ap = A;
    REQUIRE(kernels::serial::cholesky(As.data(), n, 1e-14));
    REQUIRE(kernels::omp::cholesky(Ap.data(), n, 1e-14));

    std::vector<double> x(n);
    kernels::chol_solve(As.data(), b.data(), x.data(), n);
    // residual check against original A
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = -b[i];
        for (int j = 0; j < n; ++j)
            s += A[static_cast<std::size_t>(i) * n + j] * x[j];
        worst = std::max(worst, std::fabs(s));
    }
    CHECK(worst < 1e-8);

    // both paths produce the same factor
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(As[static_cast<std::size_t>(i) * n + j] ==
                  doctest::Approx(Ap[static_cast<std::size_t>(i) * n + j])
                      .epsilon(1e-13));
}

TEST_CASE("cholesky rejects indefinite input") {
    std::vector<double> A = {1.0, 2.0, 2.0, 1.0};  // eigenvalues 3, -1
    CHECK(!kernels::serial::cholesky(A.data(), 2, 1e-14));
}

TEST_CASE("dispatcher toggle") {
    bool was = kernels::parallel_enabled();
    kernels::set_parallel_enabled(false);
    CHECK(!kernels::parallel_enabled());
    kernels::set_parallel_enabled(was);
}
