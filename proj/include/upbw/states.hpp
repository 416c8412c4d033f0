#pragma once

#include <utility>

#include "upbw/upb.hpp"

namespace upbw {

// Normalized projector onto the orthogonal complement of the span of a
// product family: rho = (I - sum_i |a_i b_i><a_i b_i|) / (dA*dB - m).
struct BoundEntangledState {
    CMatrix rho;
    Upb source;
    double norm_factor = 0.0;   // 1 / (dA*dB - m)
    double ppt_min_eig = 0.0;   // min eigenvalue after transposing the B side
    Eigen::Index rank = 0;      // eigenvalues above norm_factor/2
};

// Requires an orthonormal family occupying a proper subspace. Throws
// std::invalid_argument otherwise.
BoundEntangledState bound_entangled_state(const Upb& s);

// Recomputes the spectrum of the B-side partial transpose; true iff the
// smallest eigenvalue clears -1e-9.
std::pair<bool, double> is_ppt(const BoundEntangledState& b);

// <psi|rho|psi> for unit psi of matching dimension.
double overlap_with(const BoundEntangledState& b, const CVector& psi);

}  // namespace upbw
