#pragma once

#include <cstdint>
#include <random>

#include "upbw/linalg.hpp"

namespace upbw {

// Deterministic generator: identical seeds give identical draws on every platform.
using Rng = std::mt19937_64;

// Unit vector distributed by the rotation-invariant measure on the complex sphere:
// i.i.d. complex normal entries, then normalize.
inline CVector random_unit_vector(Eigen::Index dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        v(i) = cplx(re, im);
    }
    double norm = v.norm();
    if (norm == 0.0) return random_unit_vector(dim, rng);  // astronomically unlikely
    return v / norm;
}

}  // namespace upbw
