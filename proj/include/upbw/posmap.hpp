#pragma once

#include <cstdint>
#include <string>

#include "upbw/witness.hpp"

namespace upbw {

// Linear map S : B(H_in) -> B(H_out) carried by its block operator h on the
// composite space: S(|i><j|) is the (i,j) B-block of h, and S extends by
// linearity. h doubles as the map's Choi operator with respect to the
// unnormalized vector sum_i |i>|i>.
struct PositiveMapRep {
    CMatrix h;
    Eigen::Index in_dim = 0;
    Eigen::Index out_dim = 0;
    std::string basis_label = "standard";
};

struct MapCertificates {
    double positivity_min_sampled = 0.0;
    double choi_min_eig = 0.0;
    double indecomp_value = 0.0;   // <v|(id (x) adjoint-map)(rho)|v>, v = sum_i |i>|i>
    double ppt_of_rho = 0.0;
    double unitality_defect = 0.0;
    bool granted = false;
};

// The identity basis keeps h as-is; a general orthonormal basis (columns of
// `basis`) rotates the block structure accordingly. Throws on a
// non-orthonormal basis.
PositiveMapRep map_from_witness(const Witness& w);
PositiveMapRep map_from_witness(const Witness& w, const CMatrix& basis);

// S(x) = sum_ij x_ij * block(i,j); equals Tr_A[h (x^T (x) I)].
CMatrix apply(const PositiveMapRep& m, const CMatrix& x);

// Adjoint under the trace pairing: Tr[adjoint(y)^dag x] = Tr[y^dag S(x)].
CMatrix adjoint_apply(const PositiveMapRep& m, const CMatrix& y);

// Smallest output eigenvalue of S on rank-one inputs, minimized over `trials`
// random draws plus seesaw restarts (rank-one inputs suffice: S is linear and
// every PSD input is a convex mix of them).
double positivity_probe(const PositiveMapRep& m, int trials, int restarts,
                        std::uint64_t rng_seed);

// Min eigenvalue of the Choi operator; negative means not completely positive.
double complete_positivity_check(const PositiveMapRep& m);

// Spectral spread of S(I): zero exactly when S(I) is a scalar multiple of I.
double unitality_defect(const PositiveMapRep& m);

// Grants the certificate when the map looks positive on products, its Choi
// operator has a negative eigenvalue, and it goes negative on a state whose
// B-side partial transpose is PSD — which no sum of a completely positive map
// and a transposed completely positive map can do.
MapCertificates indecomposability_certificate(const PositiveMapRep& m,
                                              const BoundEntangledState& b,
                                              int trials = 1000, int restarts = 16,
                                              std::uint64_t rng_seed = 0);

}  // namespace upbw
