#include "upbw/epsilon.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <Eigen/SVD>

#include "upbw/seesaw.hpp"

namespace upbw {

namespace {

// Cache key for the smallest eigenvalue of a vector-sum matrix. Families with
// repeated local vectors produce the same matrix from many different index
// subsets, so keying on rounded entries collapses the duplicates.
std::string rounded_key(const CMatrix& m) {
    std::string key;
    key.reserve(static_cast<std::size_t>(m.size()) * 32);
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.12f,%.12f;", m(i, j).real(),
                          m(i, j).imag());
            key += buf;
        }
    return key;
}

double cached_min_eig(const CMatrix& m, std::unordered_map<std::string, double>& cache) {
    std::string key = rounded_key(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    double val = solver.eigenvalues()(0);
    cache.emplace(std::move(key), val);
    return val;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

double f_value(const Upb& s, const CVector& phi_a, const CVector& phi_b) {
    if (phi_a.size() != s.idx.dim_a || phi_b.size() != s.idx.dim_b)
        throw std::invalid_argument("f_value: argument dimensions do not match");
    require_unit(phi_a, "f_value phi_a");
    require_unit(phi_b, "f_value phi_b");
    double sum = 0.0;
    for (const ProductState& p : s.states) {
        const double wa = std::norm(p.alpha.dot(phi_a));
        const double wb = std::norm(p.beta.dot(phi_b));
        sum += wa * wb;
    }
    return sum;
}

std::pair<double, SubsetCertificate> epsilon_lower_bound(const Upb& s) {
    const int m = static_cast<int>(s.size());
    const int da = static_cast<int>(s.idx.dim_a);
    const int db = static_cast<int>(s.idx.dim_b);
    {
        const CMatrix g = product_gram(s);
        const double defect =
            (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
        if (defect > 1e-8)
            throw std::invalid_argument("epsilon_lower_bound: family is not orthonormal");
    }
    if (m < da)
        throw std::runtime_error(
            "epsilon_lower_bound: fewer states than the A-side dimension");

    CMatrix a(da, m), b(db, m);
    for (int i = 0; i < m; ++i) {
        a.col(i) = s.states[static_cast<std::size_t>(i)].alpha;
        b.col(i) = s.states[static_cast<std::size_t>(i)].beta;
    }

    std::unordered_map<std::string, double> eig_cache_a, eig_cache_b;
    bool found = false;
    double best = 0.0;
    SubsetCertificate best_cert;

    std::vector<int> sa(static_cast<std::size_t>(da));
    for (int i = 0; i < da; ++i) sa[static_cast<std::size_t>(i)] = i;
    do {
        CMatrix stack_a(da, da);
        for (int c = 0; c < da; ++c) stack_a.col(c) = a.col(sa[static_cast<std::size_t>(c)]);
        Eigen::JacobiSVD<CMatrix> svd_a(stack_a);
        if (svd_a.singularValues()(da - 1) <= tols().rank) continue;

        CMatrix psum_a = CMatrix::Zero(da, da);
        for (int c : sa) psum_a += a.col(c) * a.col(c).adjoint();
        const double lambda_a = cached_min_eig(psum_a, eig_cache_a);

        std::vector<int> complement;
        complement.reserve(static_cast<std::size_t>(m - da));
        {
            std::size_t pos = 0;
            for (int i = 0; i < m; ++i) {
                if (pos < sa.size() && sa[pos] == i) {
                    ++pos;
                    continue;
                }
                complement.push_back(i);
            }
        }

        for (int istar : sa) {
            std::vector<int> sb = complement;
            sb.insert(std::upper_bound(sb.begin(), sb.end(), istar), istar);
            const int nb = static_cast<int>(sb.size());
            if (nb < db) continue;

            CMatrix stack_b(db, nb);
            for (int c = 0; c < nb; ++c) stack_b.col(c) = b.col(sb[static_cast<std::size_t>(c)]);
            Eigen::JacobiSVD<CMatrix> svd_b(stack_b);
            if (svd_b.singularValues()(db - 1) <= tols().rank) continue;

            CMatrix psum_b = CMatrix::Zero(db, db);
            for (int c : sb) psum_b += b.col(c) * b.col(c).adjoint();
            const double lambda_b = cached_min_eig(psum_b, eig_cache_b);

            const double bound = (lambda_a / da) * (lambda_b / nb);
            // Strict comparison keeps the first minimizer; subsets are visited
            // in lexicographic order, so ties resolve to the smallest pair.
            if (!found || bound < best) {
                found = true;
                best = bound;
                best_cert = {sa, istar, sb, lambda_a, lambda_b};
            }
        }
    } while (next_combination(sa, m));

    if (!found)
        throw std::runtime_error(
            "epsilon_lower_bound: no admissible subset pair; the family admits an "
            "orthogonal product extension or is degenerate");
    return {best, best_cert};
}

std::pair<double, ProductState> epsilon_upper_bound(const Upb& s, int restarts,
                                                    int iters, std::uint64_t rng_seed) {
    if (restarts < 1 || iters < 1)
        throw std::invalid_argument("epsilon_upper_bound: restarts and iters must be >= 1");
    CMatrix pi = CMatrix::Zero(s.idx.total(), s.idx.total());
    for (const ProductState& p : s.states) {
        const CVector v = p.full();
        pi += v * v.adjoint();
    }
    SeesawResult r = seesaw_minimize_product(pi, s.idx, restarts, iters, rng_seed);
    // The objective is a sum of squared magnitudes; clip eigensolver dust.
    const double value = std::max(r.value, 0.0);
    return {value, ProductState{r.phi_a, r.phi_b}};
}

EpsilonBounds compute_epsilon_bounds(const Upb& s, int restarts, int iters,
                                     std::uint64_t rng_seed) {
    EpsilonBounds e;
    auto [lower, cert] = epsilon_lower_bound(s);
    e.lower = lower;
    e.certificate = cert;
    auto [upper, argmin] = epsilon_upper_bound(s, restarts, iters, rng_seed);
    e.upper = upper;
    e.argmin_upper = argmin;
    return e;
}

Proposition1Result proposition1_check(const std::vector<CVector>& vectors,
                                      const CVector& phi) {
    if (vectors.empty())
        throw std::invalid_argument("proposition1_check: empty vector set");
    const Eigen::Index dim = phi.size();
    require_unit(phi, "proposition1_check phi");
    CMatrix stack(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim)
            throw std::invalid_argument("proposition1_check: mixed dimensions");
        stack.col(static_cast<Eigen::Index>(i)) = vectors[i];
    }
    if (static_cast<Eigen::Index>(vectors.size()) < dim)
        throw std::invalid_argument("proposition1_check: set cannot span the space");
    Eigen::JacobiSVD<CMatrix> svd(stack);
    if (svd.singularValues()(dim - 1) <= tols().rank)
        throw std::invalid_argument("proposition1_check: set does not span the space");

    Proposition1Result r;
    CMatrix p = CMatrix::Zero(dim, dim);
    for (const CVector& v : vectors) {
        const double term = std::norm(v.dot(phi));
        r.sum += term;
        r.max_term = std::max(r.max_term, term);
        p += v * v.adjoint();
    }
    r.lambda_min = min_eigenvalue(p);
    return r;
}

double subset_min_eigenvalue_a(const Upb& s, const std::vector<int>& subset) {
    if (subset.empty())
        throw std::invalid_argument("subset_min_eigenvalue_a: empty subset");
    CMatrix psum = CMatrix::Zero(s.idx.dim_a, s.idx.dim_a);
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(s.size()))
            throw std::invalid_argument("subset_min_eigenvalue_a: index out of range");
        const CVector& v = s.states[static_cast<std::size_t>(i)].alpha;
        psum += v * v.adjoint();
    }
    return min_eigenvalue(psum);
}

}  // namespace upbw
