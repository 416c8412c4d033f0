#include "upbw/pipeline.hpp"

#include <stdexcept>
#include <string>

namespace upbw {

namespace {

using io::json;

// Every randomized stage draws from the run seed plus its own offset, so one
// seed pins the whole pipeline and stages stay independent of one another.
constexpr std::uint64_t kSeedOffsetEpsilon = 65536ull * 1;
constexpr std::uint64_t kSeedOffsetWitness = 65536ull * 2;
constexpr std::uint64_t kSeedOffsetCertify = 65536ull * 3;

constexpr int kWitnessSamples = 10000;
constexpr int kProbeTrials = 1000;
constexpr int kProbeRestarts = 16;

json config_to_json(const RunConfig& c) {
    json out;
    out["command"] = c.command;
    out["upb"] = c.upb_selector;
    out["seed"] = c.seed;
    out["restarts"] = c.restarts;
    out["iters"] = c.iters;
    out["tol_rank"] = c.tol_rank;
    out["mu"] = c.mu.has_value() ? json(*c.mu) : json(nullptr);
    out["threshold"] = c.threshold;
    return out;
}

}  // namespace

Upb resolve_upb(const std::string& upb_selector) {
    if (upb_selector == "pyramid") return build_pyramid();
    if (upb_selector.rfind("gentiles:", 0) == 0) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(upb_selector.substr(9), &used);
            if (used != upb_selector.size() - 9) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed upb selector: " + upb_selector);
        }
        return build_gentiles3n(n);
    }
    if (upb_selector.rfind("tensor:", 0) == 0) {
        const std::string rest = upb_selector.substr(7);
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 >= rest.size())
            throw std::invalid_argument("tensor selector needs two files: " + upb_selector);
        Upb s1 = io::load_upb_file(rest.substr(0, comma));
        Upb s2 = io::load_upb_file(rest.substr(comma + 1));
        s1.validation = validate(s1);
        s2.validation = validate(s2);
        return tensor_upb(s1, s2);
    }
    if (upb_selector.rfind("file:", 0) == 0) {
        Upb s = io::load_upb_file(upb_selector.substr(5));
        s.validation = validate(s);
        return s;
    }
    throw std::invalid_argument("unknown upb selector: " + upb_selector);
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        tols().rank = config.tol_rank;
        const Upb s = resolve_upb(config.upb_selector);

        if (config.command == "build") {
            result.doc = io::upb_to_json(s);
            result.exit_code =
                s.validation.structurally_ok() ? kExitOk : kExitValidationFailure;
        } else if (config.command == "validate") {
            result.doc = io::validation_to_json(s.validation);
            result.exit_code =
                s.validation.structurally_ok() ? kExitOk : kExitValidationFailure;
        } else if (!s.validation.structurally_ok()) {
            result.doc["error"] = "validation failed";
            result.doc["validation"] = io::validation_to_json(s.validation);
            result.exit_code = kExitValidationFailure;
        } else if (config.command == "state") {
            result.doc = io::state_to_json(bound_entangled_state(s));
        } else if (config.command == "epsilon") {
            result.doc = io::epsilon_to_json(compute_epsilon_bounds(
                s, config.restarts, config.iters, config.seed + kSeedOffsetEpsilon));
        } else if (config.command == "witness" || config.command == "map" ||
                   config.command == "certify" || config.command == "report") {
            const BoundEntangledState b = bound_entangled_state(s);
            const EpsilonBounds bounds = compute_epsilon_bounds(
                s, config.restarts, config.iters, config.seed + kSeedOffsetEpsilon);
            const MaxEntangledState psi = choose_max_entangled(b, config.threshold);
            const Witness w = build_witness(s, psi, config.mu, bounds);
            const auto [min_found, floor] = check_product_positivity(
                w, config.restarts, kWitnessSamples, config.seed + kSeedOffsetWitness);
            (void)floor;

            if (config.command == "witness") {
                result.doc = io::witness_to_json(w, min_found);
            } else {
                const PositiveMapRep rep = map_from_witness(w);
                const MapCertificates certs = indecomposability_certificate(
                    rep, b, kProbeTrials, kProbeRestarts, config.seed + kSeedOffsetCertify);
                if (config.command == "report") {
                    result.doc["config"] = config_to_json(config);
                    result.doc["upb"] = io::upb_to_json(s);
                    result.doc["validation"] = io::validation_to_json(s.validation);
                    result.doc["state"] = io::state_to_json(b);
                    result.doc["epsilon"] = io::epsilon_to_json(bounds);
                    result.doc["witness"] = io::witness_to_json(w, min_found);
                    result.doc["map"] = io::map_to_json(rep, certs);
                } else {
                    result.doc = io::map_to_json(rep, certs);
                }
                result.exit_code = certs.granted ? kExitOk : kExitCertificateRefused;
            }
        } else {
            throw std::invalid_argument("unknown command: " + config.command);
        }

        if (config.output_path)
            io::write_text_file(*config.output_path, io::dump_deterministic(result.doc));
        return result;
    } catch (const nlohmann::json::exception& e) {
        result.doc = json{{"error", e.what()}};
        result.exit_code = kExitIoError;
    } catch (const std::invalid_argument& e) {
        result.doc = json{{"error", e.what()}};
        result.exit_code = kExitIoError;
    } catch (const std::runtime_error& e) {
        // Thresholds or admissibility not met: the pipeline refuses rather
        // than reporting numbers it cannot stand behind.
        result.doc = json{{"error", e.what()}};
        result.exit_code = kExitCertificateRefused;
    } catch (const std::exception& e) {
        result.doc = json{{"error", e.what()}};
        result.exit_code = kExitIoError;
    }
    return result;
}

}  // namespace upbw
