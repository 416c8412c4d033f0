#include "upbw/states.hpp"

#include <stdexcept>

namespace upbw {

BoundEntangledState bound_entangled_state(const Upb& s) {
    const Eigen::Index total = s.idx.total();
    const Eigen::Index m = static_cast<Eigen::Index>(s.size());
    if (s.idx.dim_a < 1 || s.idx.dim_b < 1 || m == 0)
        throw std::invalid_argument("bound_entangled_state: empty or degenerate family");
    if (m >= total)
        throw std::invalid_argument(
            "bound_entangled_state: family leaves no orthogonal complement");
    {
        const CMatrix g = product_gram(s);
        const double defect =
            (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
        if (defect > 1e-8)
            throw std::invalid_argument("bound_entangled_state: family is not orthonormal");
    }

    CMatrix pi = CMatrix::Zero(total, total);
    for (const ProductState& p : s.states) {
        const CVector v = p.full();
        pi += v * v.adjoint();
    }

    BoundEntangledState b;
    b.source = s;
    b.norm_factor = 1.0 / static_cast<double>(total - m);
    b.rho = (CMatrix::Identity(total, total) - pi) * b.norm_factor;

    const HermitianEig eig = hermitian_eig(b.rho);
    b.rank = 0;
    // The spectrum has exactly two clusters, 0 and norm_factor; the midpoint
    // separates them with maximal margin.
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        if (eig.values(i) > 0.5 * b.norm_factor) ++b.rank;

    b.ppt_min_eig = min_eigenvalue(partial_transpose_b(b.rho, s.idx));
    return b;
}

std::pair<bool, double> is_ppt(const BoundEntangledState& b) {
    const double min_eig = min_eigenvalue(partial_transpose_b(b.rho, b.source.idx));
    return {min_eig >= -tols().eigen_residual, min_eig};
}

double overlap_with(const BoundEntangledState& b, const CVector& psi) {
    if (psi.size() != b.rho.rows())
        throw std::invalid_argument("overlap_with: dimension mismatch");
    require_unit(psi, "overlap_with psi");
    return std::real(psi.dot(b.rho * psi));
}

}  // namespace upbw
