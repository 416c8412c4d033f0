#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "upbw/json_io.hpp"

namespace upbw {

// Exit codes shared by the library pipeline and the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitCertificateRefused = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
    std::string upb_selector;  // pyramid | gentiles:<n> | tensor:<f1>,<f2> | file:<path>
    std::string command;    // build | validate | state | epsilon | witness | map | certify | report
    std::uint64_t seed = 0;
    int restarts = 64;
    int iters = 500;
    double tol_rank = 1e-8;
    std::optional<double> mu;
    double threshold = 1e-6;
    std::optional<std::string> output_path;
};

struct RunResult {
    int exit_code = kExitOk;
    io::json doc;
};

// Parses the family selector into a validated family. Throws
// std::invalid_argument on a malformed selector and propagates file and parse
// errors.
Upb resolve_upb(const std::string& upb_selector);

// Runs the requested stage chain and returns the document plus exit code;
// writes output_path when set. Randomized stages derive their generators from
// `seed` plus a fixed per-stage offset, so one seed pins the whole run.
RunResult run(const RunConfig& config);

}  // namespace upbw
