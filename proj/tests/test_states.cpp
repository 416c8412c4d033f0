#include <doctest.h>

#include <cmath>

#include "upbw/rng.hpp"
#include "upbw/states.hpp"
#include "upbw/witness.hpp"

using namespace upbw;

namespace {

CMatrix member_projector_sum(const Upb& s) {
    const int dim = s.idx.total();
    CMatrix pi = CMatrix::Zero(dim, dim);
    for (const ProductState& st : s.states) {
        const CVector v = st.full();
        pi += v * v.adjoint();
    }
    return pi;
}

}  // namespace

TEST_CASE("pyramid complement state is a normalized rank-4 projector") {
    const Upb p = build_pyramid();
    const BoundEntangledState b = bound_entangled_state(p);
    CHECK(b.rank == 4);
    CHECK(b.norm_factor == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(b.rho.trace().real() - 1.0) < 1e-12);
    CHECK(std::abs(b.rho.trace().imag()) < 1e-14);
    CHECK(hermiticity_defect(b.rho) < 1e-12);

    const HermitianEig eig = hermitian_eig(b.rho);
    for (int i = 0; i < eig.values.size(); ++i) {
        const double lam = eig.values(i);
        CHECK(lam > -1e-12);
        // Spectrum is {0 x5, 1/4 x4}.
        CHECK(std::min(std::abs(lam), std::abs(lam - 0.25)) < 1e-12);
    }

    const CMatrix proj = 4.0 * b.rho;
    CHECK((proj * proj - proj).cwiseAbs().maxCoeff() < 1e-9);

    for (const ProductState& st : p.states) {
        const CVector v = st.full();
        CHECK(std::abs(v.dot(b.rho * v)) < 1e-12);
    }

    CHECK(b.ppt_min_eig >= -1e-10);
    const auto [ppt, pt_min] = is_ppt(b);
    CHECK(ppt);
    CHECK(pt_min == doctest::Approx(b.ppt_min_eig).epsilon(1e-12));

    // rho equals the normalized projector onto the orthogonal complement.
    const CMatrix pi = member_projector_sum(p);
    const CMatrix expected =
        (CMatrix::Identity(9, 9) - pi) / 4.0;
    CHECK((b.rho - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("3x4 complement state has flat rank-5 spectrum") {
    const BoundEntangledState b = bound_entangled_state(build_gentiles3n(4));
    CHECK(b.rank == 5);
    CHECK(b.norm_factor == doctest::Approx(0.2).epsilon(1e-15));
    const HermitianEig eig = hermitian_eig(b.rho);
    for (int i = 0; i < eig.values.size(); ++i) {
        const double lam = eig.values(i);
        CHECK(std::min(std::abs(lam), std::abs(lam - 0.2)) < 1e-12);
    }
    CHECK(b.ppt_min_eig >= -1e-10);
}

TEST_CASE("complement and member weights always add up") {
    const Upb p = build_pyramid();
    const BoundEntangledState b = bound_entangled_state(p);
    const CMatrix pi = member_projector_sum(p);
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const CVector psi = random_unit_vector(9, rng);
        const double on_rho = overlap_with(b, psi);
        const double on_pi = psi.dot(pi * psi).real();
        CHECK(std::abs(on_rho + on_pi / 4.0 - 0.25) < 1e-12);
    }
}

TEST_CASE("pentagon state meets the singlet-like probe at its closed form") {
    const BoundEntangledState b = bound_entangled_state(build_pyramid());
    CVector psi = CVector::Zero(9);
    const BipartiteIndex idx{3, 3};
    for (int i = 0; i < 3; ++i) psi(idx.compose(i, i)) = 1.0 / std::sqrt(3.0);
    const double overlap = overlap_with(b, psi);
    const double closed =
        0.25 * (1.0 - (7.0 + std::sqrt(5.0)) / (3.0 * (3.0 + std::sqrt(5.0))));
    CHECK(std::abs(overlap - closed) < 1e-10);
    CHECK(std::abs(closed - (std::sqrt(5.0) - 1.0) / 12.0) < 1e-15);
}

TEST_CASE("3xn corner probe follows a 1/n law") {
    for (int n = 4; n <= 7; ++n) {
        const BoundEntangledState b = bound_entangled_state(build_gentiles3n(n));
        CVector psi = CVector::Zero(3 * n);
        const BipartiteIndex idx{3, n};
        for (int i = 0; i < 3; ++i) psi(idx.compose(i, i)) = 1.0 / std::sqrt(3.0);
        const double overlap = overlap_with(b, psi);
        CHECK(std::abs(overlap - 0.2 * (0.5 - 1.0 / n)) < 1e-10);
    }
}

TEST_CASE("a free-entangled ray fails the transpose test") {
    // Three orthonormal product vectors in 2x2 always leave a product ray.
    Upb s;
    s.idx = {2, 2};
    CVector e0(2), e1(2);
    e0 << cplx(1, 0), cplx(0, 0);
    e1 << cplx(0, 0), cplx(1, 0);
    s.states.push_back({e0, e0});
    s.states.push_back({e0, e1});
    s.states.push_back({e1, e0});
    const BoundEntangledState b = bound_entangled_state(s);
    CHECK(b.rank == 1);
    CHECK(is_ppt(b).first);

    // A maximally entangled ray, wrapped by hand, is flagged immediately.
    BoundEntangledState bell_like;
    bell_like.source.idx = {2, 2};
    CVector bell = CVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    bell_like.rho = bell * bell.adjoint();
    bell_like.norm_factor = 1.0;
    bell_like.rank = 1;
    const auto [ppt, pt_min] = is_ppt(bell_like);
    CHECK_FALSE(ppt);
    CHECK(pt_min == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("state construction guards its inputs") {
    // A complete basis leaves no complement.
    Upb full;
    full.idx = {2, 2};
    CVector e0(2), e1(2);
    e0 << cplx(1, 0), cplx(0, 0);
    e1 << cplx(0, 0), cplx(1, 0);
    full.states.push_back({e0, e0});
    full.states.push_back({e0, e1});
    full.states.push_back({e1, e0});
    full.states.push_back({e1, e1});
    CHECK_THROWS_AS(bound_entangled_state(full), std::invalid_argument);

    // Non-orthonormal members are rejected.
    Upb skew;
    skew.idx = {2, 2};
    skew.states.push_back({e0, e0});
    skew.states.push_back({(e0 + e1) / std::sqrt(2.0), e0});
    CHECK_THROWS_AS(bound_entangled_state(skew), std::invalid_argument);

    // Probe vectors must be normalized.
    const BoundEntangledState b = bound_entangled_state(build_pyramid());
    CHECK_THROWS_AS(overlap_with(b, CVector::Zero(9)), std::invalid_argument);
}

TEST_CASE("product of two pentagon families stays positive under transpose") {
    const Upb p = build_pyramid();
    const Upb prod = tensor_upb(p, p);
    const BoundEntangledState b = bound_entangled_state(prod);
    CHECK(b.rank == 56);
    CHECK(b.norm_factor == doctest::Approx(1.0 / 56.0).epsilon(1e-15));
    CHECK(b.ppt_min_eig >= -1e-10);
    CHECK(is_ppt(b).first);
}
