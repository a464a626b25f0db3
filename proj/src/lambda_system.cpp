#include "eitsim/lambda_system.hpp"

#include <stdexcept>

namespace eitsim {

void LambdaParams::validate() const {
    if (omega_p < 0.0) throw std::invalid_argument("LambdaParams: omega_p < 0");
    if (theta < 0.0) throw std::invalid_argument("LambdaParams: theta < 0");
    for (double r : {gamma_31, gamma_32, gamma_21, gamma_22, gamma_33})
        if (r < 0.0) throw std::invalid_argument("LambdaParams: negative rate");
}

LambdaParams atom_decay(double gamma_total) {
    if (gamma_total < 0.0) throw std::invalid_argument("atom_decay: negative rate");
    LambdaParams p;
    p.gamma_31 = 0.5 * gamma_total;
    p.gamma_32 = 0.5 * gamma_total;
    return p;
}

LambdaParams qdm_decay(double gamma_total) {
    if (gamma_total < 0.0) throw std::invalid_argument("qdm_decay: negative rate");
    LambdaParams p;
    p.gamma_31 = gamma_total;
    p.gamma_32 = 0.0;
    return p;
}

Operator lambda_hamiltonian(const LambdaParams& p) {
    p.validate();
    Operator h = p.delta_p * projector(1, 1, 3);
    h -= 0.5 * p.omega_p * (projector(3, 1, 3) + projector(1, 3, 3));
    h -= 0.5 * p.theta * (projector(3, 2, 3) + projector(2, 3, 3));
    return h;
}

std::vector<CollapseOp> lambda_collapse_ops(const LambdaParams& p) {
    p.validate();
    std::vector<CollapseOp> ops;
    if (p.gamma_31 > 0.0) ops.push_back({p.gamma_31, projector(1, 3, 3)});
    if (p.gamma_32 > 0.0) ops.push_back({p.gamma_32, projector(2, 3, 3)});
    if (p.gamma_21 > 0.0) ops.push_back({p.gamma_21, projector(1, 2, 3)});
    if (p.gamma_22 > 0.0) ops.push_back({p.gamma_22, projector(2, 2, 3)});
    if (p.gamma_33 > 0.0) ops.push_back({p.gamma_33, projector(3, 3, 3)});
    return ops;
}

Model lambda_model(const LambdaParams& p) {
    return Model{lambda_hamiltonian(p), lambda_collapse_ops(p)};
}

Model with_effective_decay(Model model, double gamma_12_eff) {
    if (gamma_12_eff < 0.0)
        throw std::invalid_argument("with_effective_decay: negative rate");
    if (model.hamiltonian.rows() != 3)
        throw std::invalid_argument("with_effective_decay: expects a 3-level model");
    if (gamma_12_eff > 0.0)
        model.collapse_ops.push_back({gamma_12_eff, projector(2, 1, 3)});
    return model;
}

Model two_level_model(double omega_p, double delta_p, double gamma_total) {
    if (omega_p < 0.0) throw std::invalid_argument("two_level_model: omega_p < 0");
    if (gamma_total < 0.0) throw std::invalid_argument("two_level_model: negative rate");
    // Basis |1>, |3>.
    Operator h = delta_p * projector(1, 1, 2);
    h -= 0.5 * omega_p * (projector(2, 1, 2) + projector(1, 2, 2));
    std::vector<CollapseOp> ops;
    if (gamma_total > 0.0) ops.push_back({gamma_total, projector(1, 2, 2)});
    return Model{std::move(h), std::move(ops)};
}

}  // namespace eitsim
