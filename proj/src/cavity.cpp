#include "eitsim/cavity.hpp"

#include <cmath>
#include <stdexcept>

namespace eitsim {

void CavityParams::validate() const {
    if (n_max < 1) throw std::invalid_argument("CavityParams: n_max must be >= 1");
    if (theta < 0.0) throw std::invalid_argument("CavityParams: theta < 0");
    for (double r : {g, kappa, epsilon, gamma_31, gamma_32, gamma_21, gamma_22, gamma_33})
        if (r < 0.0) throw std::invalid_argument("CavityParams: negative rate");
}

Operator cavity_hamiltonian(const CavityParams& p) {
    p.validate();
    const int nf = p.n_max + 1;
    const Operator eye_f = Operator::Identity(nf, nf);
    const Operator eye_e = Operator::Identity(3, 3);
    const Operator a = annihilation(p.n_max);

    Operator h = p.delta_p * (tensor(projector(1, 1, 3), eye_f) -
                              tensor(eye_e, a.adjoint() * a));
    Operator bracket = 0.5 * p.epsilon * tensor(eye_e, a) +
                       p.g * tensor(projector(3, 1, 3), a) +
                       0.5 * p.theta * tensor(projector(3, 2, 3), eye_f);
    h += bracket + bracket.adjoint();
    return h;
}

std::vector<CollapseOp> cavity_collapse_ops(const CavityParams& p,
                                            double gamma_12_eff) {
    p.validate();
    if (gamma_12_eff < 0.0)
        throw std::invalid_argument("cavity_collapse_ops: negative effective rate");
    const int nf = p.n_max + 1;
    const Operator eye_f = Operator::Identity(nf, nf);
    const Operator eye_e = Operator::Identity(3, 3);

    std::vector<CollapseOp> ops;
    if (p.kappa > 0.0) ops.push_back({p.kappa, tensor(eye_e, annihilation(p.n_max))});

    LambdaParams emitter;
    emitter.gamma_31 = p.gamma_31;
    emitter.gamma_32 = p.gamma_32;
    emitter.gamma_21 = p.gamma_21;
    emitter.gamma_22 = p.gamma_22;
    emitter.gamma_33 = p.gamma_33;
    for (auto& [rate, c] : lambda_collapse_ops(emitter))
        ops.push_back({rate, tensor(c, eye_f)});

    if (gamma_12_eff > 0.0)
        ops.push_back({gamma_12_eff, tensor(projector(2, 1, 3), eye_f)});
    return ops;
}

Model cavity_model(const CavityParams& p, double gamma_12_eff) {
    return Model{cavity_hamiltonian(p), cavity_collapse_ops(p, gamma_12_eff)};
}

double effective_decay_rate_cavity(double epsilon, double g, double gamma_32) {
    if (g <= 0.0)
        throw std::invalid_argument("effective_decay_rate_cavity: g must be > 0");
    if (epsilon < 0.0 || gamma_32 < 0.0)
        throw std::invalid_argument("effective_decay_rate_cavity: negative rate");
    const double x = epsilon / (2.0 * g);
    return x * x * gamma_32;
}

int initial_photon_cutoff(double epsilon, double kappa) {
    if (kappa <= 0.0) throw std::invalid_argument("initial_photon_cutoff: kappa must be > 0");
    const double drive = epsilon / kappa;
    return static_cast<int>(std::ceil(4.0 * drive * drive + 4.0));
}

}  // namespace eitsim
