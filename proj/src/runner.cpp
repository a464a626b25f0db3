#include "eitsim/runner.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "eitsim/analysis.hpp"
#include "eitsim/csv.hpp"
#include "eitsim/errors.hpp"
#include "eitsim/steady.hpp"
#include "eitsim/suscept.hpp"

namespace eitsim {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

const std::vector<ScenarioInfo> kScenarios = {
    {"fig1a", "Fig. 1(a)", "free-space EIT response, omega_p=0.1G theta=0.5G, atom+qdm"},
    {"fig1b", "Fig. 1(b)", "free-space EIT populations (same sweep as fig1a)"},
    {"fig1c", "Fig. 1(c)", "free-space CPT response, omega_p=0.1G theta=0.1G"},
    {"fig1d", "Fig. 1(d)",
     "free-space CPT populations; --effective-decay adds the inset curve"},
    {"fig2", "Fig. 2",
     "susceptibility orders c1/c3/c5 vs delta_p, EIT+CPT, both decay configs"},
    {"fig4a", "Fig. 4(a)", "cavity EIT transmission, g=5k eps=sqrt(0.01)k theta=1.0k"},
    {"fig4b", "Fig. 4(b)", "cavity EIT populations (same sweep as fig4a)"},
    {"fig4c", "Fig. 4(c)",
     "cavity CPT transmission, theta=0.1k; --effective-decay adds the inset curve"},
    {"fig4d", "Fig. 4(d)", "cavity CPT populations (same sweep as fig4c)"},
    {"fig5a", "Fig. 5(a)", "dark-resonance FWHM vs theta, eps=sqrt(0.01)k"},
    {"fig5b", "Fig. 5(b)", "dark-resonance FWHM vs theta, eps=sqrt(0.1)k"},
    {"fig5c", "Fig. 5(c)", "dark-resonance FWHM vs theta, eps=sqrt(0.3)k"},
    {"fig5d", "Fig. 5(d)", "dark-resonance FWHM vs theta, eps=sqrt(1.0)k"},
    {"custom", "--", "model and sweep blocks taken from the config file"},
};

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> xs(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return xs;
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 2;
}

LambdaParams lambda_params(const ModelBlock& m, const std::string& decay) {
    LambdaParams p;
    if (decay == "atom")
        p = atom_decay(m.gamma_total);
    else if (decay == "qdm")
        p = qdm_decay(m.gamma_total);
    else {
        p.gamma_31 = m.gamma_31;
        p.gamma_32 = m.gamma_32;
    }
    p.gamma_21 = m.gamma_21;
    p.gamma_22 = m.gamma_22;
    p.gamma_33 = m.gamma_33;
    p.omega_p = m.omega_p;
    p.theta = m.theta;
    return p;
}

CavityParams cavity_params(const ModelBlock& m, const std::string& decay) {
    const LambdaParams emitter = lambda_params(m, decay);
    CavityParams p;
    p.theta = m.theta;
    p.g = m.g;
    p.kappa = m.kappa;
    p.epsilon = m.epsilon;
    p.n_max = 1;  // placeholder; the adaptive solver sets the real cutoff
    p.gamma_31 = emitter.gamma_31;
    p.gamma_32 = emitter.gamma_32;
    p.gamma_21 = emitter.gamma_21;
    p.gamma_22 = emitter.gamma_22;
    p.gamma_33 = emitter.gamma_33;
    return p;
}

// How the |1> -> |2> channel rate of a curve is chosen.
enum class EffMode { none, fixed, matched_lambda, cavity_reduction };

struct CurveJob {
    std::string label;       // atom | qdm | qdm_eff | custom
    std::string decay;       // atom | qdm | custom
    EffMode eff = EffMode::none;
    double fixed_rate = 0.0;
};

struct Emitted {
    std::string path;
    int failed_rows = 0;
};

json manifest_skeleton(const RunConfig& config, const std::string& curve,
                       const std::string& artifact) {
    json m;
    m["version"] = kVersion;
    m["scenario"] = config.scenario;
    m["curve"] = curve;
    m["artifact"] = artifact;
    m["config"] = config_to_json(config);
    return m;
}

void write_with_manifest(const std::string& csv_path, const std::string& csv_text,
                         json manifest, double wall_ms,
                         std::vector<std::string>& files) {
    manifest["wall_ms"] = wall_ms;
    write_file(csv_path, csv_text);
    write_file(csv_path + ".manifest.json", manifest.dump(2) + "\n");
    files.push_back(csv_path);
}

Emitted run_lambda_curve(const RunConfig& config, const CurveJob& job,
                         const std::vector<double>& grid, int workers,
                         const std::string& path,
                         std::vector<std::string>& files) {
    const LambdaParams base = lambda_params(config.model, job.decay);
    const double gamma = config.model.gamma_total;
    const bool axis_theta = config.sweep.axis == "theta";

    const auto t0 = Clock::now();
    SweepResult result = sweep(grid, [&](double x) {
        LambdaParams p = base;
        if (axis_theta)
            p.theta = x;
        else
            p.delta_p = x;
        double rate = 0.0;
        switch (job.eff) {
            case EffMode::none: break;
            case EffMode::fixed: rate = job.fixed_rate; break;
            case EffMode::matched_lambda:
                // Mimics the symmetric-decay configuration of the same total.
                rate = matched_effective_decay_rate_lambda(p.omega_p, p.delta_p,
                                                           0.5 * gamma, 0.5 * gamma);
                break;
            case EffMode::cavity_reduction: break;  // not a free-space mode
        }
        const DensityMatrix state = solve_steady(with_effective_decay(lambda_model(p), rate));
        return PointSolution{observables_lambda(state.rho), state.residual, 0};
    }, workers);
    result.axis = config.sweep.axis;
    const double wall =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    int failed = 0;
    json rows = json::array();
    for (const auto& row : result.rows) {
        if (!row.ok) ++failed;
        rows.push_back(json{{"x", row.x},
                            {"ok", row.ok},
                            {"residual", row.residual},
                            {"error", row.error}});
    }
    json manifest = manifest_skeleton(config, job.label, "lambda_sweep");
    manifest["rows"] = std::move(rows);
    write_with_manifest(path, sweep_csv(result, false), std::move(manifest), wall, files);
    return {path, failed};
}

Emitted run_cavity_curve(const RunConfig& config, const CurveJob& job,
                         const std::vector<double>& grid, int workers,
                         const std::string& path,
                         std::vector<std::string>& files) {
    const CavityParams base = cavity_params(config.model, job.decay);
    const bool axis_theta = config.sweep.axis == "theta";
    const int forced_n_max = config.model.n_max;

    double rate = 0.0;
    if (job.eff == EffMode::fixed) rate = job.fixed_rate;
    if (job.eff == EffMode::cavity_reduction)
        rate = effective_decay_rate_cavity(base.epsilon, base.g,
                                           0.5 * config.model.gamma_total);

    const auto t0 = Clock::now();
    SweepResult result = sweep(grid, [&](double x) {
        CavityParams p = base;
        if (axis_theta)
            p.theta = x;
        else
            p.delta_p = x;
        CavitySolution sol = solve_cavity_steady(p, rate, forced_n_max);
        return PointSolution{sol.obs, sol.state.residual, sol.n_max};
    }, workers);
    result.axis = config.sweep.axis;
    try {
        normalize_transmission(result);
    } catch (const SimError&) {
        // all-failed or all-zero sweep: emit without the n_norm column values
    }
    const double wall =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    int failed = 0;
    json rows = json::array();
    for (const auto& row : result.rows) {
        if (!row.ok) ++failed;
        rows.push_back(json{{"x", row.x},
                            {"ok", row.ok},
                            {"residual", row.residual},
                            {"n_max", row.n_max},
                            {"error", row.error}});
    }
    json manifest = manifest_skeleton(config, job.label, "cavity_sweep");
    manifest["rows"] = std::move(rows);
    write_with_manifest(path, sweep_csv(result, true), std::move(manifest), wall, files);
    return {path, failed};
}

Emitted run_orders_curve(const RunConfig& config, const std::string& decay,
                         double theta, const std::vector<double>& grid,
                         const std::string& path, std::vector<std::string>& files) {
    LambdaParams base = lambda_params(config.model, decay);
    base.theta = theta;

    const auto t0 = Clock::now();
    std::vector<SusceptibilityOrders> orders;
    orders.reserve(grid.size());
    int failed = 0;
    for (double delta : grid) {
        try {
            orders.push_back(extract_orders_lambda(base, delta));
        } catch (const std::exception&) {
            ++failed;
            SusceptibilityOrders bad;
            bad.delta_p = delta;
            bad.fit_residual = std::numeric_limits<double>::quiet_NaN();
            orders.push_back(bad);
        }
    }
    const double wall =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    json manifest = manifest_skeleton(config, decay, "orders");
    manifest["theta"] = theta;
    write_with_manifest(path, orders_csv(orders), std::move(manifest), wall, files);
    return {path, failed};
}

Emitted run_fwhm_scan(const RunConfig& config, double epsilon,
                      const std::vector<double>& thetas, int workers,
                      const std::string& path, std::vector<std::string>& files) {
    ModelBlock m = config.model;
    m.kappa = 1.0;
    m.g = 5.0;
    m.gamma_total = 1.0;
    m.gamma_21 = 1e-3;
    m.gamma_22 = config.gamma2 == Gamma2Style::dephasing ? 1e-3 : 0.0;

    const auto t0 = Clock::now();
    const FwhmScan atom = fwhm_vs_theta(cavity_params(m, "atom"), thetas, epsilon, workers);
    const FwhmScan qdm = fwhm_vs_theta(cavity_params(m, "qdm"), thetas, epsilon, workers);
    const double wall =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    int failed = 0;
    json rows = json::array();
    for (size_t i = 0; i < thetas.size(); ++i) {
        if (!atom.rows[i].resolved || !qdm.rows[i].resolved) ++failed;
        rows.push_back(json{{"theta", thetas[i]},
                            {"atom_resolved", atom.rows[i].resolved},
                            {"qdm_resolved", qdm.rows[i].resolved}});
    }
    json manifest = manifest_skeleton(config, "atom+qdm", "fwhm_scan");
    manifest["epsilon"] = epsilon;
    manifest["rows"] = std::move(rows);
    write_with_manifest(path, fwhm_csv(atom, qdm), std::move(manifest), wall, files);
    return {path, failed};
}

std::vector<CurveJob> preset_curves(const RunConfig& config, bool cavity_inset) {
    std::vector<CurveJob> jobs;
    const bool want_atom = config.decay_filter.empty() || config.decay_filter == "atom";
    const bool want_qdm = config.decay_filter.empty() || config.decay_filter == "qdm";
    if (want_atom) jobs.push_back({"atom", "atom", EffMode::none, 0.0});
    if (want_qdm) jobs.push_back({"qdm", "qdm", EffMode::none, 0.0});
    if (want_qdm && config.effective_decay)
        jobs.push_back({"qdm_eff", "qdm",
                        cavity_inset ? EffMode::cavity_reduction : EffMode::matched_lambda,
                        0.0});
    return jobs;
}

}  // namespace

const std::vector<ScenarioInfo>& list_scenarios() { return kScenarios; }

std::string scenarios_table() {
    std::string out = "scenario  figure     parameters\n";
    for (const auto& s : kScenarios) {
        out += s.name;
        out.append(s.name.size() < 10 ? 10 - s.name.size() : 1, ' ');
        out += s.figure;
        out.append(s.figure.size() < 11 ? 11 - s.figure.size() : 1, ' ');
        out += s.summary;
        out += '\n';
    }
    return out;
}

json scenarios_json() {
    json out = json::array();
    for (const auto& s : kScenarios)
        out.push_back(json{{"name", s.name}, {"figure", s.figure}, {"summary", s.summary}});
    return out;
}

RunReport run(const RunConfig& input) {
    RunConfig config = input;
    config.validate();
    const int workers = resolve_workers(config.workers);
    const std::string& name = config.scenario;
    const std::string base = config.output.empty() ? name : config.output;

    RunReport report;
    auto account = [&](const Emitted& e) { report.failed_rows += e.failed_rows; };

    if (name == "custom") {
        config.validate();
        const std::vector<double> grid =
            config.sweep.log_spaced
                ? log_grid(config.sweep.min, config.sweep.max, config.sweep.points)
                : linear_grid(config.sweep.min, config.sweep.max, config.sweep.points);
        CurveJob job{"custom", config.model.decay,
                     config.model.effective_decay_rate > 0.0 ? EffMode::fixed
                                                             : EffMode::none,
                     config.model.effective_decay_rate};
        if (config.model.kind == ModelKind::lambda)
            account(run_lambda_curve(config, job, grid, workers, base + ".csv",
                                     report.files));
        else
            account(run_cavity_curve(config, job, grid, workers, base + ".csv",
                                     report.files));
    } else if (name == "fig1a" || name == "fig1b" || name == "fig1c" ||
               name == "fig1d") {
        RunConfig c = config;
        c.model.kind = ModelKind::lambda;
        c.model.gamma_total = 1.0;
        c.model.omega_p = 0.1;
        c.model.theta = (name == "fig1a" || name == "fig1b") ? 0.5 : 0.1;
        c.model.gamma_21 = c.model.gamma_22 = c.model.gamma_33 = 0.0;
        c.sweep = SweepBlock{"delta_p", -2.0, 2.0, 401, false};
        const auto grid = linear_grid(-2.0, 2.0, 401);
        for (const auto& job : preset_curves(config, false))
            account(run_lambda_curve(c, job, grid, workers,
                                     base + "_" + job.label + ".csv", report.files));
    } else if (name == "fig2") {
        RunConfig c = config;
        c.model.kind = ModelKind::lambda;
        c.model.gamma_total = 1.0;
        c.model.gamma_21 = c.model.gamma_22 = c.model.gamma_33 = 0.0;
        const auto grid = linear_grid(-2.0, 2.0, 161);
        const bool want_atom = config.decay_filter.empty() || config.decay_filter == "atom";
        const bool want_qdm = config.decay_filter.empty() || config.decay_filter == "qdm";
        for (auto [regime, theta] : {std::pair{"eit", 0.5}, {"cpt", 0.1}}) {
            if (want_atom)
                account(run_orders_curve(c, "atom", theta, grid,
                                         base + "_" + regime + "_atom.csv",
                                         report.files));
            if (want_qdm)
                account(run_orders_curve(c, "qdm", theta, grid,
                                         base + "_" + regime + "_qdm.csv",
                                         report.files));
        }
    } else if (name == "fig4a" || name == "fig4b" || name == "fig4c" ||
               name == "fig4d") {
        RunConfig c = config;
        c.model.kind = ModelKind::cavity;
        c.model.gamma_total = 1.0;
        c.model.kappa = 1.0;
        c.model.g = 5.0;
        c.model.epsilon = std::sqrt(0.01);
        c.model.theta = (name == "fig4a" || name == "fig4b") ? 1.0 : 0.1;
        c.model.gamma_21 = c.model.gamma_22 = c.model.gamma_33 = 0.0;
        c.sweep = SweepBlock{"delta_p", -2.0, 2.0, 401, false};
        const auto grid = linear_grid(-2.0, 2.0, 401);
        for (const auto& job : preset_curves(config, true))
            account(run_cavity_curve(c, job, grid, workers,
                                     base + "_" + job.label + ".csv", report.files));
    } else if (name == "fig5a" || name == "fig5b" || name == "fig5c" ||
               name == "fig5d") {
        const double eps = name == "fig5a"   ? std::sqrt(0.01)
                           : name == "fig5b" ? std::sqrt(0.1)
                           : name == "fig5c" ? std::sqrt(0.3)
                                             : std::sqrt(1.0);
        const auto thetas = log_grid(0.001, 2.0, 40);
        account(run_fwhm_scan(config, eps, thetas, workers, base + ".csv",
                              report.files));
    } else {
        throw std::invalid_argument("unknown scenario '" + name + "'");
    }

    report.exit_code = report.failed_rows > 0 ? 2 : 0;
    return report;
}

}  // namespace eitsim
