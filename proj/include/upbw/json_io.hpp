#pragma once

#include <string>

#include <json.hpp>

#include "upbw/epsilon.hpp"
#include "upbw/posmap.hpp"
#include "upbw/states.hpp"
#include "upbw/upb.hpp"
#include "upbw/witness.hpp"

namespace upbw::io {

// Ordered documents keep key order fixed, which makes byte-for-byte
// reproducibility possible.
using json = nlohmann::ordered_json;

json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j);
json vector_to_json(const CVector& v);
CVector vector_from_json(const json& j);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json upb_to_json(const Upb& s);
Upb upb_from_json(const json& j);

json validation_to_json(const ValidationReport& r);
json state_to_json(const BoundEntangledState& b);
json certificate_to_json(const SubsetCertificate& c);
json epsilon_to_json(const EpsilonBounds& e);
json witness_to_json(const Witness& w, double positivity_min_found);
json map_to_json(const PositiveMapRep& m, const MapCertificates& c);

// Fixed two-space indentation plus trailing newline.
std::string dump_deterministic(const json& j);

Upb load_upb_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace upbw::io
