#include "upbw/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace upbw::io {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

CVector vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = complex_from_json(j[static_cast<std::size_t>(i)]);
    return v;
}

json matrix_to_json(const CMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

CMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("matrix rows have inconsistent lengths");
        for (Eigen::Index jj = 0; jj < cols; ++jj)
            m(i, jj) = complex_from_json(row[static_cast<std::size_t>(jj)]);
    }
    return m;
}

json upb_to_json(const Upb& s) {
    json out;
    out["label"] = s.label;
    out["dims"] = json::array({s.idx.dim_a, s.idx.dim_b});
    json states = json::array();
    for (const ProductState& p : s.states) {
        json one;
        one["alpha"] = vector_to_json(p.alpha);
        one["beta"] = vector_to_json(p.beta);
        states.push_back(std::move(one));
    }
    out["states"] = std::move(states);
    return out;
}

Upb upb_from_json(const json& j) {
    Upb s;
    s.label = j.value("label", std::string("unlabeled"));
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2)
        throw std::invalid_argument("upb document needs dims: [dA, dB]");
    s.idx = {j["dims"][0].get<Eigen::Index>(), j["dims"][1].get<Eigen::Index>()};
    if (!j.contains("states") || !j["states"].is_array())
        throw std::invalid_argument("upb document needs a states array");
    for (const json& one : j["states"]) {
        ProductState p;
        p.alpha = vector_from_json(one.at("alpha"));
        p.beta = vector_from_json(one.at("beta"));
        if (p.alpha.size() != s.idx.dim_a || p.beta.size() != s.idx.dim_b)
            throw std::invalid_argument("state factor lengths do not match dims");
        s.states.push_back(std::move(p));
    }
    return s;
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
        default: return "unverified";
    }
}

}  // namespace

json validation_to_json(const ValidationReport& r) {
    json out;
    out["orthonormality_defect"] = r.orthonormality_defect;
    out["spans_a"] = r.spans_a;
    out["spans_b"] = r.spans_b;
    out["epsilon_lower"] = r.epsilon_lower.has_value() ? json(*r.epsilon_lower) : json(nullptr);
    out["verdict"] = verdict_name(r.verdict);
    out["failures"] = r.failures;
    return out;
}

json state_to_json(const BoundEntangledState& b) {
    json out;
    out["dims"] = json::array({b.source.idx.dim_a, b.source.idx.dim_b});
    out["rho"] = matrix_to_json(b.rho);
    out["ppt_min_eig"] = b.ppt_min_eig;
    out["rank"] = b.rank;
    out["source_label"] = b.source.label;
    return out;
}

json certificate_to_json(const SubsetCertificate& c) {
    json out;
    out["subset_a"] = c.subset_a;
    out["i_star"] = c.i_star;
    out["subset_b"] = c.subset_b;
    out["lambda_a"] = c.lambda_a;
    out["lambda_b"] = c.lambda_b;
    return out;
}

json epsilon_to_json(const EpsilonBounds& e) {
    json out;
    out["lower"] = e.lower;
    out["upper"] = e.upper;
    out["certificate"] = certificate_to_json(e.certificate);
    json argmin;
    argmin["alpha"] = vector_to_json(e.argmin_upper.alpha);
    argmin["beta"] = vector_to_json(e.argmin_upper.beta);
    out["argmin"] = std::move(argmin);
    return out;
}

json witness_to_json(const Witness& w, double positivity_min_found) {
    json out;
    out["H"] = matrix_to_json(w.h);
    out["mu"] = w.mu;
    out["psi"] = vector_to_json(w.psi.psi);
    out["trace_H_rho"] = w.trace_h_rho;
    out["eps_lower"] = w.eps_bounds.lower;
    out["positivity_min_found"] = positivity_min_found;
    return out;
}

json map_to_json(const PositiveMapRep& m, const MapCertificates& c) {
    json out;
    out["in_dim"] = m.in_dim;
    out["out_dim"] = m.out_dim;
    out["basis"] = m.basis_label;
    out["choi"] = matrix_to_json(m.h);
    json certs;
    certs["positivity_min_sampled"] = c.positivity_min_sampled;
    certs["choi_min_eig"] = c.choi_min_eig;
    certs["indecomp_value"] = c.indecomp_value;
    certs["ppt_of_rho"] = c.ppt_of_rho;
    certs["unitality_defect"] = c.unitality_defect;
    certs["granted"] = c.granted;
    out["certificates"] = std::move(certs);
    return out;
}

std::string dump_deterministic(const json& j) { return j.dump(2) + "\n"; }

Upb load_upb_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open upb file: " + path);
    json j = json::parse(in);  // throws json::parse_error on malformed input
    return upb_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text;
    if (!out)
        throw std::invalid_argument("failed while writing: " + path);
}

}  // namespace upbw::io
