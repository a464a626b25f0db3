#pragma once

#include "eitsim/cavity.hpp"
#include "eitsim/lambda_system.hpp"
#include "eitsim/qops.hpp"

namespace eitsim {

// Steady-state density matrix together with the solve residual
// ||L vec(rho)||_inf.
struct DensityMatrix {
    Operator rho;
    double residual = 0.0;

    Eigen::Index dim() const { return rho.rows(); }
    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;
};

// Solves L vec(rho) = 0 with trace(rho) = 1 by replacing one row of L with
// the trace functional and LU-factoring the bordered system. The replaced
// row is the one with the largest diagonal-dominance deficit
// (sum of off-diagonal magnitudes minus diagonal magnitude; ties -> first).
// If the residual check fails, an SVD of L diagnoses the cause:
// null-space dimension > 1 -> NON_UNIQUE_STEADY_STATE, otherwise
// SINGULAR_SYSTEM (after one recovery attempt from the singular vector).
DensityMatrix solve_steady(const SuperOperator& liouvillian);

DensityMatrix solve_steady(const Model& model);

// Observables extracted from a steady state. n_mean and top_fock_pop are
// meaningful for cavity models only and stay zero otherwise.
struct Observables {
    Complex sigma13{0.0, 0.0};  // <sigma_13>; Im = absorption, Re = dispersion
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double n_mean = 0.0;
    double top_fock_pop = 0.0;
};

Observables observables_lambda(const Operator& rho);
Observables observables_cavity(const Operator& rho, int n_max);

// Cavity steady state with automatic photon-number truncation: starts at
// initial_photon_cutoff (or forced_n_max when > 0), solves, and doubles the
// cutoff until the top Fock level holds less than kTopFockTolerance
// population (cap kMaxPhotonCutoff).
struct CavitySolution {
    DensityMatrix state;
    int n_max = 0;
    Observables obs;
};

CavitySolution solve_cavity_steady(const CavityParams& params,
                                   double gamma_12_eff = 0.0,
                                   int forced_n_max = 0);

}  // namespace eitsim
