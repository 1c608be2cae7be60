#ifndef QCHROM_SDP_HPP
#define QCHROM_SDP_HPP

#include <optional>
#include <vector>

#include "qchrom/sym_matrix.hpp"

namespace qchrom {

enum class SdpStatus { Optimal, Feasible, Infeasible, Undecided };

enum class EntryTag : std::uint8_t { Free, Zero, NonNeg, NonPos };

/// Spec-level problem: maximize <C,X> over X >= 0 (PSD) subject to
/// equality constraints <A_k,X> = b_k and per-entry sign tags.
struct SdpProblem {
    int dim = 0;
    SymMatrix objective;                            // C
    std::vector<std::pair<SymMatrix, double>> eq;   // (A_k, b_k)
    std::vector<EntryTag> tags;                     // dim*dim, symmetric; may be empty = all Free

    explicit SdpProblem(int d) : dim(d), objective(d) {}
    EntryTag tag(int i, int j) const {
        if (tags.empty()) return EntryTag::Free;
        return tags[static_cast<std::size_t>(i) * dim + j];
    }
    void set_tag(int i, int j, EntryTag t) {
        if (tags.empty()) tags.assign(static_cast<std::size_t>(dim) * dim, EntryTag::Free);
        tags[static_cast<std::size_t>(i) * dim + j] = t;
        tags[static_cast<std::size_t>(j) * dim + i] = t;
    }
};

struct SdpOptions {
    double eps_feas = 1e-7;
    double eps_psd = 1e-8;
    double eps_gap = 1e-6;
    int max_iter = 200000;
    double relax = 1.6;       // over-relaxation factor
    double mu0 = 1.0;         // initial penalty
};

struct SdpSolution {
    SdpStatus status = SdpStatus::Undecided;
    SymMatrix X;
    double objective_value = 0.0;
    double max_eq_residual = 0.0;
    double min_eigenvalue = 0.0;
    double entry_violation = 0.0;  // worst violation over tagged entries
    int iterations = 0;
};

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts = {});

// ---------------------------------------------------------------------------
// Row-based conic core shared by the theta and Gram-feasibility builders.
// Variable: (X in PSD_{psd_dim}, w in R+^{naux_nonneg} x R^{naux_free});
// functionals are written in an ambient "full" space of dimension full_dim and
// act on W X W^T when a congruence basis W is present (W has orthonormal
// columns), or on X directly otherwise.
// ---------------------------------------------------------------------------

struct SparseSymEntry {
    int i, j;   // i <= j; symmetric pair semantics
    double v;   // value of the functional matrix at (i,j) and (j,i)
};

struct ConeRow {
    std::vector<SparseSymEntry> mat;
    std::vector<std::pair<int, double>> aux;  // (aux index, coefficient)
    double rhs = 0.0;
};

struct ConeProgram {
    int full_dim = 0;
    int psd_dim = 0;            // == full_dim unless W set
    std::optional<Mat> W;       // full_dim x psd_dim
    int naux_nonneg = 0;
    int naux_free = 0;
    std::vector<SparseSymEntry> obj_mat;  // minimize <C,Q> + c.w
    std::vector<double> obj_aux;          // length naux_nonneg + naux_free
    std::vector<ConeRow> rows;
};

enum class ConeStatus { Optimal, MaxIter, BadRows };

struct ConeResult {
    ConeStatus status = ConeStatus::MaxIter;
    SymMatrix X;                // reduced PSD variable
    SymMatrix Q;                // full-space matrix (W X W^T)
    std::vector<double> w;      // aux block
    std::vector<double> y;      // row multipliers (unscaled rows)
    double pobj = 0.0, dobj = 0.0;
    double pres = 0.0;          // max |<row,u> - rhs|, unscaled
    double dres = 0.0;          // relative dual residual
    double gap = 0.0;           // relative duality gap
    int iters = 0;
};

ConeResult solve_cone(const ConeProgram& prog, const SdpOptions& opts);

/// Gram-Schmidt rank filter for equality rows given as dense vectors.
/// Returns indices of independent rows; if an inconsistent dependent row is
/// found, fills `certificate` (coefficients proving 0 = nonzero) and returns
/// nullopt.
std::optional<std::vector<int>> prune_dependent_rows(
    const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs,
    double tol, std::vector<double>* certificate);

}  // namespace qchrom

#endif
