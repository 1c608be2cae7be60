#include <cmath>
#include <random>

#include "doctest.h"
#include "qchrom/eigen.hpp"
#include "qchrom/kernels.hpp"
#include "qchrom/sym_matrix.hpp"

using namespace qchrom;

namespace {

SymMatrix random_sym(int n, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 2.0 * scale; };
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, u());
    return m;
}

double reconstruction_error(const SymMatrix& m, const EigenSym& e) {
    const int n = m.dim();
    SymMatrix r(n);
    kernels::reconstruct(e.vectors.a.data(), e.values.data(), r.raw().data(), n);
    double err = 0.0;
    for (std::size_t i = 0; i < r.data().size(); ++i) {
        double d = r.data()[i] - m.data()[i];
        err += d * d;
    }
    return std::sqrt(err);
}

}  // namespace

TEST_CASE("identity eigenvalues") {
    auto e = sym_eigen(SymMatrix::identity(3));
    for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("all-ones matrix is rank one") {
    auto e = sym_eigen(SymMatrix::ones(4));
    CHECK(e.values[0] == doctest::Approx(4.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k)
        CHECK(std::fabs(e.values[k]) < 1e-10);
}

TEST_CASE("reconstruction and orthonormality on random matrices") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        SymMatrix m = random_sym(20, seed, 3.0);
        auto e = sym_eigen(m);
        CHECK(reconstruction_error(m, e) <= 1e-10 * std::max(1.0, m.frob_norm()));
        // V^T V = I
        double worst = 0.0;
        for (int a = 0; a < 20; ++a)
            for (int b = 0; b < 20; ++b) {
                double s = 0.0;
                for (int i = 0; i < 20; ++i)
                    s += e.vectors.at(i, a) * e.vectors.at(i, b);
                worst = std::max(worst, std::fabs(s - (a == b ? 1.0 : 0.0)));
            }
        CHECK(worst <= 1e-9);
        // descending order
        for (int k = 1; k < 20; ++k) CHECK(e.values[k - 1] >= e.values[k] - 1e-12);
    }
}

TEST_CASE("psd projection") {
    SymMatrix m(2);
    m.set(0, 0, 1.0);
    m.set(1, 1, -2.0);
    SymMatrix p = psd_project(m);
    CHECK(p.at(0, 0) == doctest::Approx(1.0));
    CHECK(p.at(1, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(min_eigenvalue(p) >= -1e-12);

    SymMatrix already = random_sym(6, 7);
    SymMatrix shifted = sym_add(already, SymMatrix::identity(6), 10.0);
    // PSD input passes through untouched.
    SymMatrix q = psd_project(shifted);
    for (std::size_t i = 0; i < q.data().size(); ++i)
        CHECK(q.data()[i] == shifted.data()[i]);
}

TEST_CASE("zero and tiny matrices") {
    auto e = sym_eigen(SymMatrix(3));
    for (double v : e.values) CHECK(v == 0.0);
    auto e1 = sym_eigen(SymMatrix::identity(1));
    CHECK(e1.values[0] == 1.0);
}
