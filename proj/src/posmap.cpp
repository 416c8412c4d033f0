#include "upbw/posmap.hpp"

#include <stdexcept>

#include "upbw/rng.hpp"
#include "upbw/seesaw.hpp"

namespace upbw {

namespace {

constexpr double kCertTol = 1e-9;
constexpr std::uint64_t kSampleStreamOffset = 1u << 20;

// (i, j) output-side block of the carrier operator: the image of |i><j|.
auto block(const PositiveMapRep& m, Eigen::Index i, Eigen::Index j) {
    return m.h.block(i * m.out_dim, j * m.out_dim, m.out_dim, m.out_dim);
}

}  // namespace

PositiveMapRep map_from_witness(const Witness& w) {
    PositiveMapRep m;
    m.h = w.h;
    m.in_dim = w.source.idx.dim_a;
    m.out_dim = w.source.idx.dim_b;
    m.basis_label = "standard";
    return m;
}

PositiveMapRep map_from_witness(const Witness& w, const CMatrix& basis) {
    const Eigen::Index da = w.source.idx.dim_a;
    if (basis.rows() != da || basis.cols() != da)
        throw std::invalid_argument("map_from_witness: basis has the wrong shape");
    const double defect = (basis.adjoint() * basis - CMatrix::Identity(da, da))
                              .cwiseAbs()
                              .maxCoeff();
    if (defect > 1e-10)
        throw std::invalid_argument("map_from_witness: basis is not orthonormal");
    PositiveMapRep m = map_from_witness(w);
    // Re-expressing the input side in the given basis rotates the block grid.
    const CMatrix u = kron(basis, CMatrix::Identity(m.out_dim, m.out_dim));
    m.h = u.adjoint() * w.h * u;
    m.basis_label = "custom";
    return m;
}

CMatrix apply(const PositiveMapRep& m, const CMatrix& x) {
    if (x.rows() != m.in_dim || x.cols() != m.in_dim)
        throw std::invalid_argument("apply: input has the wrong shape");
    CMatrix out = CMatrix::Zero(m.out_dim, m.out_dim);
    for (Eigen::Index i = 0; i < m.in_dim; ++i)
        for (Eigen::Index j = 0; j < m.in_dim; ++j)
            out.noalias() += x(i, j) * block(m, i, j);
    return out;
}

CMatrix adjoint_apply(const PositiveMapRep& m, const CMatrix& y) {
    if (y.rows() != m.out_dim || y.cols() != m.out_dim)
        throw std::invalid_argument("adjoint_apply: input has the wrong shape");
    CMatrix out(m.in_dim, m.in_dim);
    for (Eigen::Index i = 0; i < m.in_dim; ++i)
        for (Eigen::Index j = 0; j < m.in_dim; ++j)
            out(i, j) = (block(m, j, i) * y).trace();
    return out;
}

double positivity_probe(const PositiveMapRep& m, int trials, int restarts,
                        std::uint64_t rng_seed) {
    if (trials < 0 || restarts < 1)
        throw std::invalid_argument("positivity_probe: trials >= 0 and restarts >= 1");
    // min over unit phi, psi of <psi|S(|phi><phi|)|psi> equals the product
    // minimum of the carrier operator (conjugating phi is a bijection of the
    // sphere), so the product seesaw applies directly.
    const BipartiteIndex idx{m.in_dim, m.out_dim};
    double min_found = seesaw_minimize_product(m.h, idx, restarts, 500, rng_seed).value;

    Rng rng(rng_seed + kSampleStreamOffset);
    for (int t = 0; t < trials; ++t) {
        const CVector phi = random_unit_vector(m.in_dim, rng);
        const CMatrix input = phi * phi.adjoint();
        min_found = std::min(min_found, min_eigenvalue(apply(m, input)));
    }
    return min_found;
}

double complete_positivity_check(const PositiveMapRep& m) {
    return min_eigenvalue(m.h);
}

double unitality_defect(const PositiveMapRep& m) {
    const CMatrix identity = CMatrix::Identity(m.in_dim, m.in_dim);
    const HermitianEig eig = hermitian_eig(apply(m, identity));
    return eig.values(eig.values.size() - 1) - eig.values(0);
}

MapCertificates indecomposability_certificate(const PositiveMapRep& m,
                                              const BoundEntangledState& b,
                                              int trials, int restarts,
                                              std::uint64_t rng_seed) {
    const BipartiteIndex idx = b.source.idx;
    if (m.in_dim != idx.dim_a || m.out_dim != idx.dim_b || m.h.rows() != b.rho.rows())
        throw std::invalid_argument(
            "indecomposability_certificate: map and state dimensions do not match");

    MapCertificates c;
    c.positivity_min_sampled = positivity_probe(m, trials, restarts, rng_seed);
    c.choi_min_eig = complete_positivity_check(m);
    c.ppt_of_rho = is_ppt(b).second;
    c.unitality_defect = unitality_defect(m);

    // <v|(id (x) adjoint-map)(rho)|v> with v = sum_i |i>|i>: route the state's
    // B-blocks through the adjoint and read the matched entries.
    cplx acc = 0.0;
    for (Eigen::Index i = 0; i < m.in_dim; ++i)
        for (Eigen::Index j = 0; j < m.in_dim; ++j) {
            const CMatrix r_ij =
                b.rho.block(i * idx.dim_b, j * idx.dim_b, idx.dim_b, idx.dim_b);
            acc += adjoint_apply(m, r_ij)(i, j);
        }
    c.indecomp_value = std::real(acc);

    // A sum of a completely positive map and a transposed completely positive
    // map keeps every PPT state nonnegative under the pairing; going negative
    // on one while staying positive on products rules the decomposition out.
    c.granted = c.positivity_min_sampled >= -kCertTol && c.choi_min_eig < -kCertTol &&
                c.indecomp_value < -kCertTol && c.ppt_of_rho >= -kCertTol;
    return c;
}

}  // namespace upbw
