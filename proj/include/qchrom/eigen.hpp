#ifndef QCHROM_EIGEN_HPP
#define QCHROM_EIGEN_HPP

#include "qchrom/sym_matrix.hpp"

namespace qchrom {

struct EigenSym {
    std::vector<double> values;  // descending
    Mat vectors;                 // orthonormal columns, vectors.at(i, k) = v_k[i]
};

/// Cyclic Jacobi diagonalisation. Sweeps until every off-diagonal magnitude
/// is at most 1e-12 * ||m||_F.
EigenSym sym_eigen(const SymMatrix& m);

/// Nearest positive semidefinite matrix (negative eigenvalues clamped to 0).
SymMatrix psd_project(const SymMatrix& m);

/// Smallest eigenvalue.
double min_eigenvalue(const SymMatrix& m);

}  // namespace qchrom

#endif
