#include "eitsim/runconfig.hpp"
#include "eitsim/csv.hpp"

#include <set>
#include <stdexcept>

namespace eitsim {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + where + it.key() + "'");
}

template <typename T>
void read(const json& obj, const char* key, T& into) {
    if (obj.contains(key)) into = obj.at(key).get<T>();
}

}  // namespace

void RunConfig::validate() const {
    if (model.kind != ModelKind::lambda && model.kind != ModelKind::cavity)
        throw std::invalid_argument("config: model.kind must be lambda or cavity");
    if (model.decay != "atom" && model.decay != "qdm" && model.decay != "custom")
        throw std::invalid_argument("config: model.decay must be atom, qdm or custom");
    if (!decay_filter.empty() && decay_filter != "atom" && decay_filter != "qdm")
        throw std::invalid_argument("config: decay filter must be atom or qdm");
    if (model.gamma_total < 0.0)
        throw std::invalid_argument("config: model.gamma_total must be >= 0");
    for (auto [key, value] :
         {std::pair{"gamma_31", model.gamma_31}, {"gamma_32", model.gamma_32},
          {"gamma_21", model.gamma_21}, {"gamma_22", model.gamma_22},
          {"gamma_33", model.gamma_33}, {"omega_p", model.omega_p},
          {"theta", model.theta}, {"g", model.g}, {"kappa", model.kappa},
          {"epsilon", model.epsilon},
          {"effective_decay_rate", model.effective_decay_rate}})
        if (value < 0.0)
            throw std::invalid_argument(std::string("config: model.") + key +
                                        " must be >= 0");
    if (model.n_max < 0)
        throw std::invalid_argument("config: model.n_max must be >= 0 (0 = auto)");
    if (model.kind == ModelKind::cavity && model.kappa <= 0.0)
        throw std::invalid_argument("config: model.kappa must be > 0 for cavity runs");
    if (sweep.axis != "delta_p" && sweep.axis != "theta")
        throw std::invalid_argument("config: sweep.axis must be delta_p or theta");
    if (sweep.points < 3)
        throw std::invalid_argument("config: sweep.points must be >= 3");
    if (!(sweep.max > sweep.min))
        throw std::invalid_argument("config: sweep.max must exceed sweep.min");
    if (sweep.log_spaced && sweep.min <= 0.0)
        throw std::invalid_argument("config: log-spaced sweep needs sweep.min > 0");
    if (workers < 0)
        throw std::invalid_argument("config: workers must be >= 0");
}

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    reject_unknown(j,
                   {"scenario", "model", "sweep", "output", "workers",
                    "effective_decay", "decay_filter", "gamma2"},
                   "");

    RunConfig c;
    read(j, "scenario", c.scenario);
    read(j, "output", c.output);
    read(j, "workers", c.workers);
    read(j, "effective_decay", c.effective_decay);
    read(j, "decay_filter", c.decay_filter);
    if (j.contains("gamma2")) {
        const std::string s = j.at("gamma2").get<std::string>();
        if (s == "dephasing")
            c.gamma2 = Gamma2Style::dephasing;
        else if (s == "decay-only")
            c.gamma2 = Gamma2Style::decay_only;
        else
            throw std::invalid_argument("config: gamma2 must be dephasing or decay-only");
    }

    if (j.contains("model")) {
        const json& m = j.at("model");
        reject_unknown(m,
                       {"kind", "decay", "gamma_total", "gamma_31", "gamma_32",
                        "gamma_21", "gamma_22", "gamma_33", "omega_p", "theta", "g",
                        "kappa", "epsilon", "n_max", "effective_decay_rate"},
                       "model.");
        if (m.contains("kind")) {
            const std::string kind = m.at("kind").get<std::string>();
            if (kind == "lambda")
                c.model.kind = ModelKind::lambda;
            else if (kind == "cavity")
                c.model.kind = ModelKind::cavity;
            else
                throw std::invalid_argument("config: model.kind must be lambda or cavity");
        }
        read(m, "decay", c.model.decay);
        read(m, "gamma_total", c.model.gamma_total);
        read(m, "gamma_31", c.model.gamma_31);
        read(m, "gamma_32", c.model.gamma_32);
        read(m, "gamma_21", c.model.gamma_21);
        read(m, "gamma_22", c.model.gamma_22);
        read(m, "gamma_33", c.model.gamma_33);
        read(m, "omega_p", c.model.omega_p);
        read(m, "theta", c.model.theta);
        read(m, "g", c.model.g);
        read(m, "kappa", c.model.kappa);
        read(m, "epsilon", c.model.epsilon);
        read(m, "n_max", c.model.n_max);
        read(m, "effective_decay_rate", c.model.effective_decay_rate);
    }

    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        reject_unknown(s, {"axis", "min", "max", "points", "log"}, "sweep.");
        read(s, "axis", c.sweep.axis);
        read(s, "min", c.sweep.min);
        read(s, "max", c.sweep.max);
        read(s, "points", c.sweep.points);
        read(s, "log", c.sweep.log_spaced);
    }

    c.validate();
    return c;
}

json config_to_json(const RunConfig& c) {
    json m{{"kind", c.model.kind == ModelKind::lambda ? "lambda" : "cavity"},
           {"decay", c.model.decay},
           {"gamma_total", c.model.gamma_total},
           {"gamma_31", c.model.gamma_31},
           {"gamma_32", c.model.gamma_32},
           {"gamma_21", c.model.gamma_21},
           {"gamma_22", c.model.gamma_22},
           {"gamma_33", c.model.gamma_33},
           {"omega_p", c.model.omega_p},
           {"theta", c.model.theta},
           {"g", c.model.g},
           {"kappa", c.model.kappa},
           {"epsilon", c.model.epsilon},
           {"n_max", c.model.n_max},
           {"effective_decay_rate", c.model.effective_decay_rate}};
    json s{{"axis", c.sweep.axis},
           {"min", c.sweep.min},
           {"max", c.sweep.max},
           {"points", c.sweep.points},
           {"log", c.sweep.log_spaced}};
    return json{{"scenario", c.scenario},
                {"model", m},
                {"sweep", s},
                {"output", c.output},
                {"workers", c.workers},
                {"effective_decay", c.effective_decay},
                {"decay_filter", c.decay_filter},
                {"gamma2", c.gamma2 == Gamma2Style::dephasing ? "dephasing"
                                                              : "decay-only"}};
}

RunConfig load_config_file(const std::string& path) {
    const auto text = read_file(path);
    json j = json::parse(text);
    // A manifest embeds the config that produced it; accept both forms.
    if (j.is_object() && j.contains("config")) j = j.at("config");
    return config_from_json(j);
}

}  // namespace eitsim
