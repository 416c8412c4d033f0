#include "upbw/seesaw.hpp"

#include <cmath>
#include <stdexcept>

#include "upbw/parallel.hpp"
#include "upbw/rng.hpp"

namespace upbw {

namespace {

constexpr double kConvergence = 1e-13;

// (I (x) <phi_b|) k (I (x) |phi_b>): the Hermitian form the A factor sees.
CMatrix contract_b_side(const CMatrix& k, const BipartiteIndex& idx, const CVector& phi_b) {
    CMatrix m(idx.dim_a, idx.dim_a);
    for (Eigen::Index i = 0; i < idx.dim_a; ++i)
        for (Eigen::Index j = 0; j < idx.dim_a; ++j)
            m(i, j) = phi_b.dot(k.block(i * idx.dim_b, j * idx.dim_b, idx.dim_b,
                                        idx.dim_b) *
                                phi_b);
    return m;
}

// (<phi_a| (x) I) k (|phi_a> (x) I): the form the B factor sees.
CMatrix contract_a_side(const CMatrix& k, const BipartiteIndex& idx, const CVector& phi_a) {
    CMatrix m = CMatrix::Zero(idx.dim_b, idx.dim_b);
    for (Eigen::Index i = 0; i < idx.dim_a; ++i)
        for (Eigen::Index j = 0; j < idx.dim_a; ++j)
            m.noalias() += std::conj(phi_a(i)) * phi_a(j) *
                           k.block(i * idx.dim_b, j * idx.dim_b, idx.dim_b, idx.dim_b);
    return m;
}

struct RestartOutcome {
    double value = 0.0;
    CVector phi_a;
    CVector phi_b;
    std::vector<double> trace;
};

}  // namespace

SeesawResult seesaw_minimize_product(const CMatrix& k, const BipartiteIndex& idx,
                                     int restarts, int iters, std::uint64_t rng_seed) {
    require_square(k, "seesaw_minimize_product");
    require_dims(k, idx, "seesaw_minimize_product");
    if (restarts < 1 || iters < 1)
        throw std::invalid_argument(
            "seesaw_minimize_product: restarts and iters must be >= 1");
    if (hermiticity_defect(k) > tols().hermiticity)
        throw std::invalid_argument("seesaw_minimize_product: objective is not Hermitian");
    const CMatrix sym = 0.5 * (k + k.adjoint());

    std::vector<RestartOutcome> slots(static_cast<std::size_t>(restarts));
    parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        Rng rng(rng_seed + r);
        CVector phi_a = random_unit_vector(idx.dim_a, rng);
        CVector phi_b = random_unit_vector(idx.dim_b, rng);
        RestartOutcome& out = slots[r];
        double f = std::real(phi_a.dot(contract_b_side(sym, idx, phi_b) * phi_a));
        out.trace.push_back(f);
        for (int t = 0; t < iters; ++t) {
            Eigen::SelfAdjointEigenSolver<CMatrix> ea(contract_b_side(sym, idx, phi_b));
            phi_a = ea.eigenvectors().col(0);
            out.trace.push_back(ea.eigenvalues()(0));

            Eigen::SelfAdjointEigenSolver<CMatrix> eb(contract_a_side(sym, idx, phi_a));
            phi_b = eb.eigenvectors().col(0);
            const double f_new = eb.eigenvalues()(0);
            out.trace.push_back(f_new);
            if (std::abs(f - f_new) < kConvergence) {
                f = f_new;
                break;
            }
            f = f_new;
        }
        out.value = out.trace.back();
        out.phi_a = phi_a;
        out.phi_b = phi_b;
    });

    // Reduce in restart order with a strict comparison: the winner cannot
    // depend on how the restarts were scheduled.
    std::size_t best = 0;
    for (std::size_t r = 1; r < slots.size(); ++r)
        if (slots[r].value < slots[best].value) best = r;

    SeesawResult result;
    result.value = slots[best].value;
    result.phi_a = slots[best].phi_a;
    result.phi_b = slots[best].phi_b;
    result.traces.reserve(slots.size());
    for (RestartOutcome& s : slots) result.traces.push_back(std::move(s.trace));
    return result;
}

}  // namespace upbw
