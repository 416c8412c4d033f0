#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "upbw/epsilon.hpp"
#include "upbw/states.hpp"

namespace upbw {

struct MaxEntangledState {
    CVector psi;                 // unit vector on the composite space
    Eigen::Index schmidt_dim = 0;  // min(dA, dB)
    double entropy = 0.0;        // base-2 entropy of the A reduction
};

// Entanglement witness H = sum_i |a_i b_i><a_i b_i| - d*mu*|psi><psi| with
// d = min(dA, dB) and 0 < mu <= certified lower bound.
struct Witness {
    CMatrix h;
    double mu = 0.0;
    MaxEntangledState psi;
    Upb source;
    EpsilonBounds eps_bounds;
    double trace_h_rho = 0.0;
};

// Entropy test against log2 min(dA, dB); 0*log(0) counts as 0.
std::pair<bool, double> is_maximally_entangled(const CVector& psi,
                                               const BipartiteIndex& idx);

// Builds the generalized Bell vector (1/sqrt(d)) sum_j w^{jk} |j>|(j+l) mod d>
// with w = exp(2*pi*i/d), shifted by `offset` on the larger side when the
// local dimensions differ.
CVector bell_vector(const BipartiteIndex& idx, int k, int l, int offset = 0);

// Scans the generalized Bell family over every contiguous d-dimensional
// window of the larger side and returns the member with the largest
// <psi|rho|psi>, provided it exceeds `threshold`; otherwise throws
// std::runtime_error. Scan order: window offset, then k, then l; the first
// maximum wins.
MaxEntangledState choose_max_entangled(const BoundEntangledState& b,
                                       double threshold = 1e-6);

// mu defaults to the certified lower bound (the strongest admissible choice).
// The first overload recomputes the bounds with the given deterministic
// defaults; the second reuses a precomputed pair.
Witness build_witness(const Upb& s, const MaxEntangledState& psi,
                      std::optional<double> mu = std::nullopt,
                      int restarts = 64, int iters = 500, std::uint64_t rng_seed = 0);
Witness build_witness(const Upb& s, const MaxEntangledState& psi,
                      std::optional<double> mu, const EpsilonBounds& bounds);

// Minimizes Tr(H * P (x) Q) over product projectors by seesaw restarts plus
// uniform sampling. Returns (smallest value found, eps_lower - mu), the
// second being the analytic floor the search can never beat.
std::pair<double, double> check_product_positivity(const Witness& w, int restarts,
                                                   int samples, std::uint64_t rng_seed);

// |<psi|phi_a (x) phi_b>|^2; callers assert it stays below 1/d.
double lemma1_check(const MaxEntangledState& psi, const CVector& phi_a,
                    const CVector& phi_b);

}  // namespace upbw
