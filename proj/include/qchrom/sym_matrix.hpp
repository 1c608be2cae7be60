#ifndef QCHROM_SYM_MATRIX_HPP
#define QCHROM_SYM_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qchrom {

/// Dense rectangular matrix, row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Dense symmetric matrix; both triangles stored, kept equal.
class SymMatrix {
public:
    SymMatrix() : dim_(0) {}
    explicit SymMatrix(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
        if (dim < 0) throw std::invalid_argument("negative dimension");
    }

    static SymMatrix identity(int dim) {
        SymMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.diag(i) = 1.0;
        return m;
    }
    static SymMatrix ones(int dim) {
        SymMatrix m(dim);
        for (auto& x : m.a_) x = 1.0;
        return m;
    }
    /// Symmetrise arbitrary row-major data as (A + A^T)/2.
    static SymMatrix from_full(int dim, const std::vector<double>& data);

    int dim() const { return dim_; }
    double at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }
    /// Mutable diagonal access (off-diagonal writes must go through set()).
    double& diag(int i) { return a_[idx(i, i)]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& raw() { return a_; }  // caller keeps symmetry

    double frob_norm() const;
    double max_abs() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * dim_ + j;
    }
    int dim_;
    std::vector<double> a_;
};

/// Frobenius inner product of two symmetric matrices.
double frob_inner(const SymMatrix& x, const SymMatrix& y);

SymMatrix sym_add(const SymMatrix& x, const SymMatrix& y, double alpha = 1.0);
SymMatrix sym_scale(const SymMatrix& x, double alpha);

}  // namespace qchrom

#endif
