#pragma once

#include <string>

#include <json.hpp>

namespace eitsim {

inline constexpr const char* kVersion = "eitsim 0.1.0";

enum class ModelKind { lambda, cavity };

// Reading of the dark-resonance-scan ground-state decoherence "Gamma_2":
// `dephasing` sets the pure dephasing gamma_22 alongside gamma_21,
// `decay_only` treats Gamma_2 as the total width of |2>, i.e. gamma_22 = 0.
enum class Gamma2Style { dephasing, decay_only };

struct SweepBlock {
    std::string axis = "delta_p";  // delta_p or theta
    double min = -2.0;
    double max = 2.0;
    int points = 401;
    bool log_spaced = false;
};

struct ModelBlock {
    ModelKind kind = ModelKind::lambda;
    std::string decay = "atom";  // atom | qdm | custom
    double gamma_total = 1.0;    // used by the atom/qdm factories
    double gamma_31 = 0.5;       // used when decay == custom
    double gamma_32 = 0.5;
    double gamma_21 = 0.0;
    double gamma_22 = 0.0;
    double gamma_33 = 0.0;
    double omega_p = 0.1;  // free-space probe
    double theta = 0.5;
    double g = 5.0;  // cavity parameters
    double kappa = 1.0;
    double epsilon = 0.1;
    int n_max = 0;                     // photon cutoff; 0 = automatic
    double effective_decay_rate = 0.0; // fixed extra |1> -> |2> channel
};

struct RunConfig {
    std::string scenario = "custom";
    ModelBlock model;
    SweepBlock sweep;
    std::string output;  // artifact base path; empty = scenario name
    int workers = 0;     // 0 = hardware concurrency
    bool effective_decay = false;
    std::string decay_filter;  // "", "atom" or "qdm": restrict preset curves
    Gamma2Style gamma2 = Gamma2Style::dephasing;

    void validate() const;  // throws std::invalid_argument naming the key
};

// Strict JSON (de)serialization; unknown keys are rejected with a
// diagnostic naming the offending key.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

RunConfig load_config_file(const std::string& path);

}  // namespace eitsim
