#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eitsim/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "eitsim: steady-state optical response of Lambda emitters (atom / quantum-dot"
        " molecule) in free space and inside a driven cavity"};

    std::string scenario, config_path, out, decay, gamma2;
    int workers = 0;
    bool effective_decay = false, as_json = false;

    app.add_option("--scenario", scenario,
                   "preset name (run with no arguments to list them) or 'custom'");
    app.add_option("--config", config_path, "JSON config or manifest file");
    app.add_option("--out", out, "output base path (default: scenario name)");
    app.add_option("--workers", workers, "worker threads for sweeps (0 = auto)");
    app.add_flag("--effective-decay", effective_decay,
                 "add the effective |1>->|2> decay curve where the preset defines one");
    app.add_option("--decay", decay, "atom|qdm|custom: curve filter / custom model decay")
        ->check(CLI::IsMember({"atom", "qdm", "custom"}));
    app.add_option("--gamma2", gamma2,
                   "reading of the scan dephasing Gamma_2: dephasing|decay-only")
        ->check(CLI::IsMember({"dephasing", "decay-only"}));
    app.add_flag("--json", as_json, "machine-readable scenario listing");

    CLI11_PARSE(app, argc, argv);

    if (scenario.empty() && config_path.empty()) {
        if (as_json)
            std::cout << eitsim::scenarios_json().dump(2) << "\n";
        else
            std::cout << eitsim::scenarios_table();
        return 0;
    }

    try {
        eitsim::RunConfig config;
        if (!config_path.empty()) config = eitsim::load_config_file(config_path);
        if (!scenario.empty()) config.scenario = scenario;
        if (!out.empty()) config.output = out;
        if (workers > 0) config.workers = workers;
        if (effective_decay) config.effective_decay = true;
        if (!gamma2.empty())
            config.gamma2 = gamma2 == "dephasing" ? eitsim::Gamma2Style::dephasing
                                                  : eitsim::Gamma2Style::decay_only;
        if (!decay.empty()) {
            if (config.scenario == "custom")
                config.model.decay = decay;
            else if (decay == "custom")
                throw std::invalid_argument("--decay custom applies to --scenario custom only");
            else
                config.decay_filter = decay;
        }
        config.validate();

        const eitsim::RunReport report = eitsim::run(config);
        for (const auto& file : report.files) std::cout << "wrote " << file << "\n";
        if (report.failed_rows > 0)
            std::cerr << report.failed_rows << " sweep row(s) failed; see manifests\n";
        return report.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
