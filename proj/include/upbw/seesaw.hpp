#pragma once

#include <cstdint>
#include <vector>

#include "upbw/linalg.hpp"

namespace upbw {

struct SeesawResult {
    double value = 0.0;
    CVector phi_a;
    CVector phi_b;
    // Objective after the initial draw and after every half-step, one trace
    // per restart. Each trace is nonincreasing up to roundoff.
    std::vector<std::vector<double>> traces;
};

// Minimizes <phi_a (x) phi_b| k |phi_a (x) phi_b> over unit vectors by
// alternating lowest-eigenvector updates: fixing one factor makes the
// objective a Hermitian quadratic form in the other. Restart r uses a
// generator seeded rng_seed + r; iteration stops when the objective moves by
// less than 1e-13 or after `iters` rounds. The minimum is reduced in restart
// order, so scheduling cannot change the result.
SeesawResult seesaw_minimize_product(const CMatrix& k, const BipartiteIndex& idx,
                                     int restarts, int iters, std::uint64_t rng_seed);

}  // namespace upbw
