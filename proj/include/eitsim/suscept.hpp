#pragma once

#include <array>
#include <functional>
#include <span>

#include "eitsim/lambda_system.hpp"
#include "eitsim/qops.hpp"

namespace eitsim {

// Analytic first-order susceptibility of the Lambda system,
//   chi1 = 2 dp / (2 dp (2 dp - i G) - theta^2),
// G the total excited-state decay. Depends on the decay split only through
// G. The point dp = 0, theta = 0 is the bare two-level pole.
Complex chi1_analytic(double delta_p, double theta, double gamma_total);

// Analytic third-order susceptibility, evaluated verbatim; has 1/dp poles,
// so dp = 0 is rejected (use chi3_at_resonance_limit).
Complex chi3_analytic(double delta_p, double theta, double gamma_31,
                      double gamma_32);

// dp -> 0 limit of chi3_analytic via symmetric evaluation at +-1e-6 G and
// +-0.5e-6 G followed by one Richardson step in dp^2.
Complex chi3_at_resonance_limit(double theta, double gamma_31, double gamma_32);

// Small-theta expansion of Im chi3: theta-independent term, theta^-2 term
// (zero when gamma_32 = 0) and the A theta^2 term. Exact Taylor coefficients
// of chi3_analytic (residual decays as theta^4).
double chi3_im_series(double delta_p, double theta, double gamma_31,
                      double gamma_32);

// Steady excited-state population of the driven two-level system,
//   P3 = |omega_p|^2 / (G^2 + 4 dp^2 + 2 |omega_p|^2), in [0, 1/2).
double two_level_p3(double omega_p, double delta_p, double gamma_total);

// Effective |1> -> |2> pumping rate of the free-space reduction as
// P3 * gamma_32 (two-level P3 at the total decay gamma_3).
double effective_decay_rate_lambda(double omega_p, double delta_p,
                                   double gamma_3, double gamma_32);

// Flux-balanced variant: multiplies by gamma_3 / gamma_31, the ratio of the
// asymmetric model's return branching to the mimicked one's. For the
// symmetric split gamma_31 = gamma_32 this equals 2 P3 gamma_32, which is
// the rate that actually reproduces the symmetric-decay populations.
double matched_effective_decay_rate_lambda(double omega_p, double delta_p,
                                           double gamma_31, double gamma_32);

// Odd-power Taylor coefficients of the steady coherence,
// <sigma_13>(omega_p) ~ c1 w + c3 w^3 + c5 w^5.
struct SusceptibilityOrders {
    double delta_p = 0.0;
    Complex c1{0.0, 0.0};
    Complex c3{0.0, 0.0};
    Complex c5{0.0, 0.0};
    double fit_residual = 0.0;
};

// Probe amplitudes used for the extraction fit (units of the total decay).
std::array<double, 4> default_probe_ladder();

// Least-squares fit of coherence samples over the probe ladder. `coherence`
// maps a probe Rabi frequency to the steady <sigma_13>. Columns of the
// design matrix are normalized before the solve; the conditioning test
// applies to the normalized system.
SusceptibilityOrders extract_orders(const std::function<Complex(double)>& coherence,
                                    double delta_p, std::span<const double> omegas);

// Extraction on the free-space Lambda model: params.omega_p is replaced by
// each ladder value, params.delta_p by delta_p.
SusceptibilityOrders extract_orders_lambda(const LambdaParams& params,
                                           double delta_p,
                                           std::span<const double> omegas);
SusceptibilityOrders extract_orders_lambda(const LambdaParams& params,
                                           double delta_p);

// Self-consistent intracavity photon number of the driven two-level
// emitter-cavity reduction, with cooperativity C = 2 g^2 / (kappa gamma_3)
// and saturation photon number n0 = gamma_3^2 / (8 g^2).
struct CavitySaturation {
    double n = 0.0;
    double p3 = 0.0;
    double cooperativity = 0.0;
    double n0 = 0.0;
};

CavitySaturation cavity_saturation(double epsilon, double g, double kappa,
                                   double gamma_3);

}  // namespace eitsim
