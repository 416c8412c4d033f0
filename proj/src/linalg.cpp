#include "upbw/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace upbw {

Tolerances& tols() {
    static Tolerances t;
    return t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

CVector kron(const CVector& a, const CVector& b) {
    return Eigen::kroneckerProduct(a, b);
}

CMatrix partial_trace_b(const CMatrix& m, const BipartiteIndex& idx) {
    require_dims(m, idx, "partial_trace_b");
    CMatrix out = CMatrix::Zero(idx.dim_a, idx.dim_a);
    for (Eigen::Index i = 0; i < idx.dim_a; ++i)
        for (Eigen::Index j = 0; j < idx.dim_a; ++j)
            for (Eigen::Index k = 0; k < idx.dim_b; ++k)
                out(i, j) += m(idx.compose(i, k), idx.compose(j, k));
    return out;
}

CMatrix partial_transpose_b(const CMatrix& m, const BipartiteIndex& idx) {
    require_dims(m, idx, "partial_transpose_b");
    CMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < idx.dim_a; ++i)
        for (Eigen::Index j = 0; j < idx.dim_a; ++j)
            out.block(i * idx.dim_b, j * idx.dim_b, idx.dim_b, idx.dim_b) =
                m.block(i * idx.dim_b, j * idx.dim_b, idx.dim_b, idx.dim_b).transpose();
    return out;
}

double hermiticity_defect(const CMatrix& m) {
    require_square(m, "hermiticity_defect");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const CMatrix& m) {
    if (hermiticity_defect(m) > tols().hermiticity)
        throw std::invalid_argument("hermitian_eig: input exceeds hermiticity tolerance");
    CMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& m) {
    if (hermiticity_defect(m) > tols().hermiticity)
        throw std::invalid_argument("min_eigenvalue: input exceeds hermiticity tolerance");
    CMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("min_eigenvalue: eigensolver failed to converge");
    return solver.eigenvalues()(0);
}

}  // namespace upbw
