#pragma once

#include <vector>

#include "eitsim/lambda_system.hpp"
#include "eitsim/qops.hpp"

namespace eitsim {

// Driven cavity containing one Lambda emitter. The |1>-|3> transition is
// resonant with the cavity mode; the probe laser of strength epsilon drives
// the cavity; delta_p = omega_probe - omega_cavity. Frequencies in units of
// the cavity intensity decay rate kappa.
struct CavityParams {
    double delta_p = 0.0;
    double theta = 0.0;
    double g = 0.0;        // emitter-cavity coupling
    double kappa = 0.0;    // cavity intensity decay rate
    double epsilon = 0.0;  // probe drive strength
    int n_max = 1;         // photon-number cutoff

    // Emitter decay/dephasing, same meaning as in LambdaParams.
    double gamma_31 = 0.0;
    double gamma_32 = 0.0;
    double gamma_21 = 0.0;
    double gamma_22 = 0.0;
    double gamma_33 = 0.0;

    void validate() const;
};

// H = delta_p (s11 - a+a) + [ (eps/2) a + g a s31 + (theta/2) s32 + h.c. ]
// on the emitter (x) field product space, dimension 3 (n_max + 1).
// The bracket is implemented with the printed overall plus sign; observable
// spectra are invariant under its global sign.
Operator cavity_hamiltonian(const CavityParams& p);

// Emitter channels tensored with the field identity, plus (kappa, I (x) a).
// gamma_12_eff > 0 appends the effective (gamma_12_eff, s21 (x) I) channel.
std::vector<CollapseOp> cavity_collapse_ops(const CavityParams& p,
                                            double gamma_12_eff = 0.0);

Model cavity_model(const CavityParams& p, double gamma_12_eff = 0.0);

// Effective |1> -> |2> rate for the driven-cavity reduction:
// |epsilon / 2g|^2 * gamma_32.
double effective_decay_rate_cavity(double epsilon, double g, double gamma_32);

// Starting photon cutoff of the auto-truncation rule:
// ceil(4 |epsilon/kappa|^2 + 4), doubled after each failed adequacy check.
int initial_photon_cutoff(double epsilon, double kappa);

inline constexpr int kMaxPhotonCutoff = 64;
inline constexpr double kTopFockTolerance = 1e-6;

}  // namespace eitsim
