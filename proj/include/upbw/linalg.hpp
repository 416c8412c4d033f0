// Dense complex linear algebra helpers for bipartite systems.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace upbw {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Numerical tolerances shared across the library. Mutable via tols() so a
// driver can tighten or relax them globally.
struct Tolerances {
    double unit_norm = 1e-10;       // |‖v‖ − 1| for vectors required to be normalized
    double hermiticity = 1e-10;     // max |A − A†| entry before eig refuses the input
    double eigen_residual = 1e-9;   // ‖Av − λv‖ relative to ‖A‖, and projector defects
    double rank = 1e-8;             // smallest singular value counted as nonzero
};

Tolerances& tols();

// Addresses H_A ⊗ H_B with the composite row-major index k = i*dim_b + j.
struct BipartiteIndex {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;

    Eigen::Index total() const { return dim_a * dim_b; }
    Eigen::Index compose(Eigen::Index i, Eigen::Index j) const { return i * dim_b + j; }

    bool operator==(const BipartiteIndex& o) const {
        return dim_a == o.dim_a && dim_b == o.dim_b;
    }
};

// Kronecker products, A-factor slowest (consistent with BipartiteIndex).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

// Trace out the B factor: result(i,j) = Σ_k m(i*dB+k, j*dB+k).
CMatrix partial_trace_b(const CMatrix& m, const BipartiteIndex& idx);

// Transpose each dB×dB block in place of its (i,j) position. Pure data
// movement, so applying it twice restores the input bit for bit.
CMatrix partial_transpose_b(const CMatrix& m, const BipartiteIndex& idx);

double hermiticity_defect(const CMatrix& m);

struct HermitianEig {
    RVector values;   // ascending
    CMatrix vectors;  // columns, orthonormal, vectors.col(k) ↔ values(k)
};

// Eigendecomposition of a Hermitian matrix. Inputs within the hermiticity
// tolerance are symmetrized as (A+A†)/2 first; anything worse throws.
HermitianEig hermitian_eig(const CMatrix& m);

double min_eigenvalue(const CMatrix& m);

inline void require_square(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

inline void require_dims(const CMatrix& m, const BipartiteIndex& idx, const char* who) {
    require_square(m, who);
    if (m.rows() != idx.total()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

inline void require_unit(const CVector& v, const char* who) {
    if (std::abs(v.norm() - 1.0) > tols().unit_norm)
        throw std::invalid_argument(std::string(who) + ": vector not unit norm");
}

}  // namespace upbw
