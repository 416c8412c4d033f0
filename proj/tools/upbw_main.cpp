#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "upbw/pipeline.hpp"

namespace {

const std::vector<std::pair<const char*, const char*>> kCommands = {
    {"build", "construct the product family and emit it as JSON"},
    {"validate", "run the structural and separation checks"},
    {"state", "emit the complement density matrix and its transpose spectrum"},
    {"epsilon", "certified lower and numerical upper separation bounds"},
    {"witness", "build the witness operator and probe product positivity"},
    {"map", "emit the induced linear map with its certificates"},
    {"certify", "same as map: grant or refuse the indecomposability certificate"},
    {"report", "full chain in one document"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"turn unextendible product families into bound-entangled states, "
                 "entanglement witnesses, and indecomposable positive maps"};
    app.require_subcommand(1);

    upbw::RunConfig cfg;
    for (const auto& [name, desc] : kCommands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--upb", cfg.upb_selector,
                        "pyramid | gentiles:<n> | tensor:<f1>,<f2> | file:<path>")
            ->required();
        sub->add_option("--seed", cfg.seed, "seed for every randomized stage");
        sub->add_option("--restarts", cfg.restarts, "seesaw restarts");
        sub->add_option("--iters", cfg.iters, "seesaw iteration cap");
        sub->add_option("--tol-rank", cfg.tol_rank, "singular-value rank cutoff");
        sub->add_option("--mu", cfg.mu,
                        "witness strength; defaults to the certified lower bound");
        sub->add_option("--threshold", cfg.threshold,
                        "required overlap when selecting the entangled state");
        sub->add_option("-o,--output", cfg.output_path, "also write the document here");
        sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : upbw::kExitIoError;
    }

    const upbw::RunResult result = upbw::run(cfg);
    std::fputs(upbw::io::dump_deterministic(result.doc).c_str(), stdout);
    return result.exit_code;
}
