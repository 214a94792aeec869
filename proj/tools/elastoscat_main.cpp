// Batch entry point: subcommand dispatch over a JSON run configuration.
//
//   elastoscat <solve|farfield|sweep|verify|distances> --config cfg.json
//              [--output path] [--seed N] [--threads N]
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.
// The environment variable ELASTO_SEED overrides the config seed.
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "elastoscat/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"2-D elastic scattering laboratory"};
    app.require_subcommand(1);

    std::string config_path, output_override;
    long long seed_override = -1;
    int threads_override = 0;

    for (const char* name : {"solve", "farfield", "sweep", "verify", "distances"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--output", output_override, "override the config output path");
        sub->add_option("--seed", seed_override, "override the config seed");
        sub->add_option("--threads", threads_override, "cap worker threads");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        elast::RunConfig cfg = elast::load_config_file(config_path);
        if (const char* env = std::getenv("ELASTO_SEED")) {
            try {
                cfg.seed = std::stoull(env);
            } catch (...) {
                throw elast::invalid_input("ELASTO_SEED: not an unsigned integer");
            }
        }
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
        if (!output_override.empty()) cfg.output = output_override;
        if (threads_override > 0) cfg.threads = threads_override;

        std::string summary = elast::run_subcommand(cmd, cfg);
        std::cout << cmd << ": " << summary << "\n";
        return 0;
    } catch (const elast::invalid_input& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const elast::numerical_error& e) {
        std::cerr << "error: numerical: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
}
