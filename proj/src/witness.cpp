#include "upbw/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "upbw/rng.hpp"
#include "upbw/seesaw.hpp"

namespace upbw {

namespace {

// Offset separating the uniform-sampling stream from the per-restart seesaw
// streams (which use rng_seed + restart_index).
constexpr std::uint64_t kSampleStreamOffset = 1u << 20;

CMatrix reduced_a(const CVector& psi, const BipartiteIndex& idx) {
    CMatrix rho_a = CMatrix::Zero(idx.dim_a, idx.dim_a);
    for (Eigen::Index i = 0; i < idx.dim_a; ++i)
        for (Eigen::Index j = 0; j < idx.dim_a; ++j)
            for (Eigen::Index kk = 0; kk < idx.dim_b; ++kk)
                rho_a(i, j) += psi(idx.compose(i, kk)) * std::conj(psi(idx.compose(j, kk)));
    return rho_a;
}

CMatrix projector_sum(const Upb& s) {
    CMatrix pi = CMatrix::Zero(s.idx.total(), s.idx.total());
    for (const ProductState& p : s.states) {
        const CVector v = p.full();
        pi += v * v.adjoint();
    }
    return pi;
}

}  // namespace

std::pair<bool, double> is_maximally_entangled(const CVector& psi,
                                               const BipartiteIndex& idx) {
    if (psi.size() != idx.total())
        throw std::invalid_argument("is_maximally_entangled: dimension mismatch");
    require_unit(psi, "is_maximally_entangled psi");
    const HermitianEig eig = hermitian_eig(reduced_a(psi, idx));
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double p = eig.values(i);
        if (p > 1e-15) entropy -= p * std::log2(p);
    }
    const double target = std::log2(static_cast<double>(std::min(idx.dim_a, idx.dim_b)));
    return {std::abs(entropy - target) <= 1e-8, entropy};
}

CVector bell_vector(const BipartiteIndex& idx, int k, int l, int offset) {
    const Eigen::Index d = std::min(idx.dim_a, idx.dim_b);
    const Eigen::Index spare = std::max(idx.dim_a, idx.dim_b) - d;
    if (k < 0 || k >= d || l < 0 || l >= d)
        throw std::invalid_argument("bell_vector: phase or shift index out of range");
    if (offset < 0 || offset > spare)
        throw std::invalid_argument("bell_vector: window offset out of range");
    CVector psi = CVector::Zero(idx.total());
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    const bool a_larger = idx.dim_a > idx.dim_b;
    for (Eigen::Index j = 0; j < d; ++j) {
        // The window offset shifts the larger side; the smaller side is used whole.
        const Eigen::Index ia = a_larger ? offset + j : j;
        const Eigen::Index ib = a_larger ? (j + l) % d : offset + (j + l) % d;
        psi(idx.compose(ia, ib)) = norm * std::exp(cplx(0.0, step * static_cast<double>(j * k)));
    }
    return psi;
}

MaxEntangledState choose_max_entangled(const BoundEntangledState& b, double threshold) {
    if (threshold <= 0.0)
        throw std::invalid_argument("choose_max_entangled: threshold must be positive");
    const BipartiteIndex idx = b.source.idx;
    const int d = static_cast<int>(std::min(idx.dim_a, idx.dim_b));
    const int spare = static_cast<int>(std::max(idx.dim_a, idx.dim_b)) - d;

    double best = -1.0;
    CVector best_psi;
    for (int offset = 0; offset <= spare; ++offset)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const CVector psi = bell_vector(idx, k, l, offset);
                const double ov = overlap_with(b, psi);
                if (ov > best) {
                    best = ov;
                    best_psi = psi;
                }
            }
    if (best <= threshold)
        throw std::runtime_error(
            "choose_max_entangled: no family member overlaps the state above the "
            "threshold");
    MaxEntangledState m;
    m.psi = best_psi;
    m.schmidt_dim = d;
    m.entropy = is_maximally_entangled(best_psi, idx).second;
    return m;
}

Witness build_witness(const Upb& s, const MaxEntangledState& psi,
                      std::optional<double> mu, int restarts, int iters,
                      std::uint64_t rng_seed) {
    return build_witness(s, psi, mu, compute_epsilon_bounds(s, restarts, iters, rng_seed));
}

Witness build_witness(const Upb& s, const MaxEntangledState& psi,
                      std::optional<double> mu, const EpsilonBounds& bounds) {
    if (psi.psi.size() != s.idx.total())
        throw std::invalid_argument("build_witness: state dimension mismatch");
    const BoundEntangledState b = bound_entangled_state(s);
    const double overlap = overlap_with(b, psi.psi);
    if (overlap < 1e-12)
        throw std::invalid_argument(
            "build_witness: chosen state has no overlap with the complement state");
    const double mu_val = mu.value_or(bounds.lower);
    if (!(mu_val > 0.0) || mu_val > bounds.lower + 1e-15)
        throw std::invalid_argument(
            "build_witness: mu must lie in (0, certified lower bound]");

    const double d = static_cast<double>(std::min(s.idx.dim_a, s.idx.dim_b));
    Witness w;
    w.h = projector_sum(s) - d * mu_val * (psi.psi * psi.psi.adjoint());
    w.mu = mu_val;
    w.psi = psi;
    w.source = s;
    w.eps_bounds = bounds;
    w.trace_h_rho = std::real((w.h * b.rho).trace());
    return w;
}

std::pair<double, double> check_product_positivity(const Witness& w, int restarts,
                                                   int samples, std::uint64_t rng_seed) {
    if (restarts < 1 || samples < 0)
        throw std::invalid_argument(
            "check_product_positivity: restarts must be >= 1 and samples >= 0");
    const BipartiteIndex idx = w.source.idx;
    double min_found = seesaw_minimize_product(w.h, idx, restarts, 500, rng_seed).value;

    Rng rng(rng_seed + kSampleStreamOffset);
    for (int t = 0; t < samples; ++t) {
        const CVector v =
            kron(random_unit_vector(idx.dim_a, rng), random_unit_vector(idx.dim_b, rng));
        min_found = std::min(min_found, std::real(v.dot(w.h * v)));
    }
    return {min_found, w.eps_bounds.lower - w.mu};
}

double lemma1_check(const MaxEntangledState& psi, const CVector& phi_a,
                    const CVector& phi_b) {
    if (phi_a.size() * phi_b.size() != psi.psi.size())
        throw std::invalid_argument("lemma1_check: dimension mismatch");
    require_unit(phi_a, "lemma1_check phi_a");
    require_unit(phi_b, "lemma1_check phi_b");
    return std::norm(psi.psi.dot(kron(phi_a, phi_b)));
}

}  // namespace upbw
