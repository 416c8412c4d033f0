#include "grid_oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace {

Eigen::Vector3d unit_from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

// One weight row per grid point: ((a_0 . u)^2, ..., (a_4 . u)^2).
Eigen::Matrix<double, Eigen::Dynamic, 5> weight_rows(
    const Eigen::Matrix<double, 3, 5>& family, const std::vector<double>& thetas,
    const std::vector<double>& phis) {
    Eigen::Matrix<double, Eigen::Dynamic, 5> rows(
        static_cast<Eigen::Index>(thetas.size() * phis.size()), 5);
    Eigen::Index r = 0;
    for (double theta : thetas)
        for (double phi : phis) {
            const Eigen::Vector3d u = unit_from_angles(theta, phi);
            rows.row(r++) = (family.transpose() * u).array().square().transpose();
        }
    return rows;
}

struct GridMin {
    double value;
    Eigen::Index row_a;
    Eigen::Index row_b;
};

// Minimum of WA * WB^T over all row pairs, evaluated in row blocks so the
// intermediate product stays small.
GridMin pairwise_min(const Eigen::Matrix<double, Eigen::Dynamic, 5>& wa,
                     const Eigen::Matrix<double, Eigen::Dynamic, 5>& wb) {
    GridMin best{1e300, 0, 0};
    const Eigen::Index block = 256;
    for (Eigen::Index r0 = 0; r0 < wa.rows(); r0 += block) {
        const Eigen::Index rows = std::min(block, wa.rows() - r0);
        const Eigen::MatrixXd prod = wa.middleRows(r0, rows) * wb.transpose();
        Eigen::Index i = 0, j = 0;
        const double local = prod.minCoeff(&i, &j);
        if (local < best.value) best = {local, r0 + i, j};
    }
    return best;
}

std::vector<double> linear_range(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * double(i) / double(count - 1);
    return out;
}

}  // namespace

GridOracleResult grid_minimize_products(const Eigen::Matrix<double, 3, 5>& va,
                                        const Eigen::Matrix<double, 3, 5>& vb) {
    constexpr double pi = std::numbers::pi;

    // Coarse scan. Antipodal symmetry u -> -u leaves every weight unchanged,
    // so the upper half sphere suffices.
    const int n_theta = 61, n_phi = 240;
    std::vector<double> thetas = linear_range(0.0, 0.5 * pi, n_theta);
    std::vector<double> phis(n_phi);
    for (int i = 0; i < n_phi; ++i) phis[static_cast<std::size_t>(i)] = 2.0 * pi * i / n_phi;

    const auto wa = weight_rows(va, thetas, phis);
    const auto wb = weight_rows(vb, thetas, phis);
    const GridMin coarse = pairwise_min(wa, wb);

    auto angles_of = [&](Eigen::Index row) {
        return std::pair<double, double>(thetas[static_cast<std::size_t>(row / n_phi)],
                                         phis[static_cast<std::size_t>(row % n_phi)]);
    };
    auto [ta, pa] = angles_of(coarse.row_a);
    auto [tb, pb] = angles_of(coarse.row_b);

    // Coarse-to-fine refinement: shrink a joint window around the incumbent.
    double span = 2.0 * pi / n_phi;  // one full coarse cell in each direction
    const int fine = 21;
    GridOracleResult result;
    result.value = coarse.value;
    for (int level = 0; level < 9; ++level) {
        const auto ra = weight_rows(va, linear_range(ta - span, ta + span, fine),
                                    linear_range(pa - span, pa + span, fine));
        const auto rb = weight_rows(vb, linear_range(tb - span, tb + span, fine),
                                    linear_range(pb - span, pb + span, fine));
        const GridMin local = pairwise_min(ra, rb);
        const auto idx_angle = [&](Eigen::Index row, double tc, double pc) {
            const int it = static_cast<int>(row) / fine;
            const int ip = static_cast<int>(row) % fine;
            return std::pair<double, double>(
                tc - span + 2.0 * span * it / double(fine - 1),
                pc - span + 2.0 * span * ip / double(fine - 1));
        };
        std::tie(ta, pa) = idx_angle(local.row_a, ta, pa);
        std::tie(tb, pb) = idx_angle(local.row_b, tb, pb);
        result.value = local.value;
        span /= 5.0;
    }
    result.arg_a = unit_from_angles(ta, pa);
    result.arg_b = unit_from_angles(tb, pb);
    return result;
}
