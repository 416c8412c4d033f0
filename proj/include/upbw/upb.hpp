#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upbw/linalg.hpp"

namespace upbw {

// One member |alpha> (x) |beta> of a product family. Factors are stored
// separately because the index pairing carries meaning; full() composes them.
struct ProductState {
    CVector alpha;
    CVector beta;
    CVector full() const { return kron(alpha, beta); }
};

enum class Verdict { Valid, Invalid, Unverified };

// Valid    = orthonormal + both sides span + certified separation constant > 0.
// Unverified = structurally fine but no positive separation certificate.
// Invalid  = structural failure; `failures` lists each reason.
struct ValidationReport {
    double orthonormality_defect = 0.0;
    bool spans_a = false;
    bool spans_b = false;
    std::optional<double> epsilon_lower;
    Verdict verdict = Verdict::Unverified;
    std::vector<std::string> failures;
    bool structurally_ok() const { return verdict != Verdict::Invalid; }
};

struct ValidationOptions {
    bool compute_epsilon = true;
    // Skip the separation certificate when the subset enumeration would
    // exceed this many size-dA index subsets (tensor-product families).
    std::size_t max_enumeration = 100000;
};

struct Upb {
    std::vector<ProductState> states;
    BipartiteIndex idx{0, 0};
    std::string label;
    ValidationReport validation;
    std::size_t size() const { return states.size(); }
};

// Five real product states in 3x3 built from the apex vectors of a regular
// pentagonal pyramid; the B factor of state i reuses apex vector 2i mod 5.
Upb build_pyramid();

// Apex vector i of the pyramid construction (unit norm, real entries).
CVector pyramid_apex_vector(int i);

// 3xn family with 3n-5 members, n >= 4: three twisted rails, three dominoes,
// one uniform state. Throws std::invalid_argument for n < 4.
Upb build_gentiles3n(int n);

// Member-wise tensor product with index regrouping (A1 A2)|(B1 B2).
// Requires both inputs orthonormal; the result is validated structurally only.
Upb tensor_upb(const Upb& s1, const Upb& s2);

// Structural checks always run; the separation certificate runs on request and
// failures are reported in the verdict, never thrown.
ValidationReport validate(const Upb& s, const ValidationOptions& opts = {});

// Gram matrix of the full product vectors.
CMatrix product_gram(const Upb& s);

}  // namespace upbw
