#pragma once

#include <vector>

#include "eitsim/qops.hpp"

namespace eitsim {

// Free-space three-level Lambda system: two ground states |1>, |2> and an
// excited state |3>. |1>-|3> is driven by the probe (Rabi frequency
// omega_p); |2>-|3> is coupled with strength theta, which stands for the
// control-field Rabi frequency (atom) or the interdot tunneling rate (QDM).
// All frequencies and rates are in units of the total excited-state decay.
struct LambdaParams {
    double delta_p = 0.0;   // probe detuning
    double omega_p = 0.0;   // probe Rabi frequency, >= 0
    double theta = 0.0;     // control coupling, >= 0
    double gamma_31 = 0.0;  // decay |3> -> |1>
    double gamma_32 = 0.0;  // decay |3> -> |2>
    double gamma_21 = 0.0;  // decay |2> -> |1>
    double gamma_22 = 0.0;  // pure dephasing of |2>
    double gamma_33 = 0.0;  // pure dephasing of |3>

    double gamma_3_total() const { return gamma_31 + gamma_32; }
    void validate() const;
};

enum class DecayConfig { atom, qdm, custom };

// gamma_31 = gamma_32 = gamma/2.
LambdaParams atom_decay(double gamma_total);
// gamma_31 = gamma, gamma_32 = 0.
LambdaParams qdm_decay(double gamma_total);

// Hamiltonian plus Lindblad channels; input to the Liouvillian assembly.
struct Model {
    Operator hamiltonian;
    std::vector<CollapseOp> collapse_ops;
};

// H = delta_p s11 - (omega_p/2)(s31 + s13) - (theta/2)(s32 + s23),
// basis order |1>, |2>, |3>.
Operator lambda_hamiltonian(const LambdaParams& p);

// Decay channels (G31, s13), (G32, s23), (G21, s12) and dephasing channels
// (G22, s22), (G33, s33); zero-rate entries omitted.
std::vector<CollapseOp> lambda_collapse_ops(const LambdaParams& p);

Model lambda_model(const LambdaParams& p);

// Appends the |1> -> |2> channel (gamma_12_eff, s21) to an existing model.
Model with_effective_decay(Model model, double gamma_12_eff);

// Driven two-level system |1>, |3> (the theta -> 0 reduction): probe with
// Rabi frequency omega_p, excited-state decay gamma_total back to |1>.
Model two_level_model(double omega_p, double delta_p, double gamma_total);

}  // namespace eitsim
