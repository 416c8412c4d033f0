#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "upbw/upb.hpp"

namespace upbw {

// Minimizing subset pair behind the certified lower bound.
// subset_a has exactly dA indices whose A-side vectors are independent;
// subset_b is the complement of subset_a plus i_star, and spans the B side.
struct SubsetCertificate {
    std::vector<int> subset_a;
    int i_star = -1;
    std::vector<int> subset_b;
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    double bound() const {
        return (lambda_a / static_cast<double>(subset_a.size())) *
               (lambda_b / static_cast<double>(subset_b.size()));
    }
};

struct EpsilonBounds {
    double lower = 0.0;
    double upper = 0.0;
    ProductState argmin_upper;
    SubsetCertificate certificate;
};

// f(phi_a, phi_b) = sum_i |<phi_a|alpha_i>|^2 |<phi_b|beta_i>|^2.
double f_value(const Upb& s, const CVector& phi_a, const CVector& phi_b);

// Certified lower bound on min f over product states: enumerate every size-dA
// index subset with independent A-side vectors, pair it with complement+{i*}
// sets that span the B side, and minimize (lambda_a/dA)*(lambda_b/|S_B|).
// Ties resolve to the lexicographically smallest (subset_a, i_star).
// Throws std::runtime_error when no admissible pair exists.
std::pair<double, SubsetCertificate> epsilon_lower_bound(const Upb& s);

// Numerical upper bound by alternating eigenvector minimization of f with
// Haar-random restarts. Restart r draws from a generator seeded rng_seed + r;
// the best value is reduced in restart order, so the result is independent of
// how restarts are scheduled.
std::pair<double, ProductState> epsilon_upper_bound(const Upb& s, int restarts,
                                                    int iters, std::uint64_t rng_seed);

EpsilonBounds compute_epsilon_bounds(const Upb& s, int restarts, int iters,
                                     std::uint64_t rng_seed);

struct Proposition1Result {
    double sum = 0.0;
    double max_term = 0.0;
    double lambda_min = 0.0;
};

// For a spanning set {psi_i} and unit phi: sum_i |<phi|psi_i>|^2, its largest
// term, and the smallest eigenvalue of sum_i |psi_i><psi_i|. Callers assert
// n * max_term >= sum >= lambda_min.
Proposition1Result proposition1_check(const std::vector<CVector>& vectors,
                                      const CVector& phi);

// Smallest eigenvalue of sum_{i in subset} |alpha_i><alpha_i| for an index
// subset of A-side vectors (exposed for the certified-bound regressions).
double subset_min_eigenvalue_a(const Upb& s, const std::vector<int>& subset);

}  // namespace upbw
