#pragma once

#include <Eigen/Dense>

// Deterministic coarse-to-fine grid minimizer for
//   f(u, v) = sum_i (a_i . u)^2 (b_i . v)^2
// over real unit vectors u, v in R^3, with a_i / b_i the columns of `va` /
// `vb`. Written against raw Eigen only, as an independent cross-check of the
// library's randomized search. Real minimizers suffice: splitting complex
// arguments into real and imaginary parts expresses any complex value of f as
// a convex combination of four real-pair values.
struct GridOracleResult {
    double value = 0.0;
    Eigen::Vector3d arg_a;
    Eigen::Vector3d arg_b;
};

GridOracleResult grid_minimize_products(const Eigen::Matrix<double, 3, 5>& va,
                                        const Eigen::Matrix<double, 3, 5>& vb);
