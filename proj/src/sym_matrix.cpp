#include "qchrom/sym_matrix.hpp"

#include <cmath>

#include "qchrom/kernels.hpp"

namespace qchrom {

SymMatrix SymMatrix::from_full(int dim, const std::vector<double>& data) {
    if (static_cast<std::size_t>(dim) * dim != data.size())
        throw std::invalid_argument("from_full: size mismatch");
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            double v = 0.5 * (data[static_cast<std::size_t>(i) * dim + j] +
                              data[static_cast<std::size_t>(j) * dim + i]);
            m.set(i, j, v);
        }
    return m;
}

double SymMatrix::frob_norm() const {
    return std::sqrt(kernels::dot(a_.data(), a_.data(), a_.size()));
}

double SymMatrix::max_abs() const {
    return kernels::max_abs(a_.data(), a_.size());
}

double frob_inner(const SymMatrix& x, const SymMatrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("frob_inner: dim mismatch");
    return kernels::dot(x.data().data(), y.data().data(), x.data().size());
}

SymMatrix sym_add(const SymMatrix& x, const SymMatrix& y, double alpha) {
    if (x.dim() != y.dim()) throw std::invalid_argument("sym_add: dim mismatch");
    SymMatrix r = x;
    kernels::axpy(alpha, y.data().data(), r.raw().data(), r.raw().size());
    return r;
}

SymMatrix sym_scale(const SymMatrix& x, double alpha) {
    SymMatrix r = x;
    for (auto& v : r.raw()) v *= alpha;
    return r;
}

}  // namespace qchrom
