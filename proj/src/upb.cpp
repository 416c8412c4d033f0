#include "upbw/upb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "upbw/epsilon.hpp"

namespace upbw {

namespace {

constexpr double kOrthonormTol = 1e-8;

// C(n, k) with saturation; only used to predict enumeration cost.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - k + i) / i;
    }
    return r > cap ? cap + 1 : r;
}

// Columns are the chosen side's vectors; spanning means the stacked matrix
// has full row rank, judged by its dim-th largest singular value.
bool side_spans(const std::vector<ProductState>& states, bool a_side,
                Eigen::Index dim, double tol_rank) {
    const Eigen::Index m = static_cast<Eigen::Index>(states.size());
    if (m < dim) return false;
    CMatrix stack(dim, m);
    for (Eigen::Index i = 0; i < m; ++i)
        stack.col(i) = a_side ? states[static_cast<std::size_t>(i)].alpha
                              : states[static_cast<std::size_t>(i)].beta;
    Eigen::JacobiSVD<CMatrix> svd(stack);
    return svd.singularValues()(dim - 1) > tol_rank;
}

}  // namespace

CVector pyramid_apex_vector(int i) {
    const double h = 0.5 * std::sqrt(1.0 + std::sqrt(5.0));
    const double scale = 2.0 / std::sqrt(5.0 + std::sqrt(5.0));
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i % 5) / 5.0;
    CVector v(3);
    v << cplx(scale * std::cos(angle), 0.0), cplx(scale * std::sin(angle), 0.0),
        cplx(scale * h, 0.0);
    return v;
}

Upb build_pyramid() {
    Upb s;
    s.idx = {3, 3};
    s.label = "pyramid";
    s.states.reserve(5);
    for (int i = 0; i < 5; ++i)
        s.states.push_back({pyramid_apex_vector(i), pyramid_apex_vector((2 * i) % 5)});
    s.validation = validate(s);
    return s;
}

Upb build_gentiles3n(int n) {
    if (n < 4)
        throw std::invalid_argument("build_gentiles3n: n must be at least 4");
    Upb s;
    s.idx = {3, n};
    s.label = "gentiles:" + std::to_string(n);
    const double twist = 2.0 * std::numbers::pi / (n - 2);
    const double rail_norm = 1.0 / std::sqrt(static_cast<double>(n - 2));

    // Three rails: A level p, B support {base(p)} + {3..n-1} with twisted phases.
    // base cycles 0 -> 1, 1 -> 2, 2 -> 0.
    for (int p = 0; p < 3; ++p) {
        const int base = (p + 1) % 3;
        for (int k = 1; k <= n - 3; ++k) {
            CVector alpha = CVector::Zero(3);
            alpha(p) = 1.0;
            CVector beta = CVector::Zero(n);
            beta(base) = rail_norm;
            for (int l = 3; l < n; ++l)
                beta(l) = rail_norm * std::exp(cplx(0.0, twist * k * (l - 2)));
            s.states.push_back({alpha, beta});
        }
    }
    // Three dominoes: (|p> - |p+1>)/sqrt(2) against B level p.
    for (int p = 0; p < 3; ++p) {
        CVector alpha = CVector::Zero(3);
        alpha(p) = 1.0 / std::sqrt(2.0);
        alpha((p + 1) % 3) = -1.0 / std::sqrt(2.0);
        CVector beta = CVector::Zero(n);
        beta(p) = 1.0;
        s.states.push_back({alpha, beta});
    }
    // Uniform state.
    {
        CVector alpha = CVector::Constant(3, cplx(1.0 / std::sqrt(3.0), 0.0));
        CVector beta = CVector::Constant(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
        s.states.push_back({alpha, beta});
    }
    s.validation = validate(s);
    return s;
}

Upb tensor_upb(const Upb& s1, const Upb& s2) {
    if (s1.states.empty() || s2.states.empty())
        throw std::invalid_argument("tensor_upb: empty input family");
    for (const Upb* in : {&s1, &s2}) {
        const CMatrix g = product_gram(*in);
        const double defect =
            (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
        if (defect > kOrthonormTol)
            throw std::invalid_argument("tensor_upb: input family is not orthonormal");
    }
    Upb out;
    out.idx = {s1.idx.dim_a * s2.idx.dim_a, s1.idx.dim_b * s2.idx.dim_b};
    out.label = "tensor(" + s1.label + "," + s2.label + ")";
    out.states.reserve(s1.size() * s2.size());
    for (const ProductState& p : s1.states)
        for (const ProductState& q : s2.states)
            out.states.push_back({kron(p.alpha, q.alpha), kron(p.beta, q.beta)});
    // The separation certificate is skipped: products of orthonormal spanning
    // families stay orthonormal and spanning, but the subset enumeration grows
    // combinatorially, so the result reports Unverified.
    ValidationOptions opts;
    opts.compute_epsilon = false;
    out.validation = validate(out, opts);
    return out;
}

CMatrix product_gram(const Upb& s) {
    const Eigen::Index m = static_cast<Eigen::Index>(s.size());
    CMatrix a(s.idx.dim_a, m);
    CMatrix b(s.idx.dim_b, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const ProductState& p = s.states[static_cast<std::size_t>(i)];
        if (p.alpha.size() != s.idx.dim_a || p.beta.size() != s.idx.dim_b)
            throw std::invalid_argument("product_gram: state dimensions do not match");
        a.col(i) = p.alpha;
        b.col(i) = p.beta;
    }
    // <a_i b_i | a_j b_j> factorizes, so the Gram is an entrywise product.
    return ((a.adjoint() * a).array() * (b.adjoint() * b).array()).matrix();
}

ValidationReport validate(const Upb& s, const ValidationOptions& opts) {
    ValidationReport r;
    if (s.idx.dim_a < 1 || s.idx.dim_b < 1) {
        r.failures.push_back("local dimensions must be positive");
        r.verdict = Verdict::Invalid;
        return r;
    }
    if (s.states.empty()) {
        r.failures.push_back("family has no states");
        r.verdict = Verdict::Invalid;
        return r;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.states[i].alpha.size() != s.idx.dim_a || s.states[i].beta.size() != s.idx.dim_b) {
            r.failures.push_back("state " + std::to_string(i) +
                                 " has factors of the wrong dimension");
            r.verdict = Verdict::Invalid;
            return r;
        }
    }

    const CMatrix g = product_gram(s);
    r.orthonormality_defect =
        (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
    if (r.orthonormality_defect > kOrthonormTol)
        r.failures.push_back("family is not orthonormal");

    if (static_cast<Eigen::Index>(s.size()) >= s.idx.total())
        r.failures.push_back("family leaves no orthogonal complement");

    r.spans_a = side_spans(s.states, true, s.idx.dim_a, tols().rank);
    r.spans_b = side_spans(s.states, false, s.idx.dim_b, tols().rank);
    if (!r.spans_a) r.failures.push_back("A-side vectors do not span their space");
    if (!r.spans_b) r.failures.push_back("B-side vectors do not span their space");

    if (!r.failures.empty()) {
        r.verdict = Verdict::Invalid;
        return r;
    }

    if (opts.compute_epsilon &&
        binomial_capped(s.size(), static_cast<std::size_t>(s.idx.dim_a),
                        opts.max_enumeration) <= opts.max_enumeration) {
        try {
            r.epsilon_lower = epsilon_lower_bound(s).first;
        } catch (const std::exception&) {
            // No admissible subset pair: the complement may contain a product
            // state, so the separation constant stays at zero.
            r.epsilon_lower = 0.0;
        }
    }
    r.verdict = (r.epsilon_lower.has_value() && *r.epsilon_lower > 0.0)
                    ? Verdict::Valid
                    : Verdict::Unverified;
    return r;
}

}  // namespace upbw
