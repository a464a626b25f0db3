#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eitsim/cavity.hpp"
#include "eitsim/steady.hpp"

namespace eitsim {

// One solved grid point. Failed solves keep the row with ok = false and the
// error message; the sweep continues.
struct SweepRow {
    double x = 0.0;
    bool ok = false;
    std::string error;
    Observables obs;
    double residual = 0.0;
    int n_max = 0;  // photon cutoff actually used (cavity rows)
};

struct SweepResult {
    std::string axis = "delta_p";
    std::vector<SweepRow> rows;
    std::vector<double> n_norm;  // filled by normalize_transmission

    bool normalized() const { return !n_norm.empty(); }
};

// Result of solving one grid point.
struct PointSolution {
    Observables obs;
    double residual = 0.0;
    int n_max = 0;
};

using PointSolver = std::function<PointSolution(double)>;

// Runs `solve_point` over the grid, optionally on several worker threads.
// Rows are written by index, so the output is identical for any worker
// count. Grid must be strictly monotonic with at least 3 points.
SweepResult sweep(std::span<const double> grid, const PointSolver& solve_point,
                  int workers = 1);

// Adds the n_norm column (n_mean / max n_mean over successful rows).
void normalize_transmission(SweepResult& result);

// Peak statistics from a sampled spectrum.
struct PeakStats {
    double center = 0.0;
    double height = 0.0;
    double fwhm = 0.0;
    double left_half = 0.0;
    double right_half = 0.0;
    bool resolved = false;
};

// FWHM of the single peak inside [window_lo, window_hi]: the peak position
// is refined with a parabola through the three samples around the maximum;
// half-maximum crossings (at half the refined height, no baseline
// subtraction) are linearly interpolated. Local maxima are counted above
// half height; more than one raises AMBIGUOUS_PEAK, a maximum on the window
// edge raises UNRESOLVED. A missing crossing clears `resolved`.
PeakStats fwhm(std::span<const double> xs, std::span<const double> ys,
               double window_lo, double window_hi);
PeakStats fwhm(std::span<const double> xs, std::span<const double> ys);

// One row of a FWHM-vs-theta scan.
struct FwhmRow {
    double theta = 0.0;
    PeakStats stats;
    bool resolved = false;
};

struct FwhmScan {
    std::vector<FwhmRow> rows;
    // Minimum over resolved rows; empty when nothing resolved.
    std::optional<double> min_fwhm;
    std::optional<double> theta_at_min;
};

// Width of the dark-state transmission resonance at Delta_p = 0 for each
// theta. For each row the probe-detuning window is adapted: starting from
// +-2 kappa, the n_mean profile is descended from Delta_p = 0 outward; the
// window shrinks (or widens, up to +-4 kappa) until at least
// `min_samples_in_fwhm` grid points fall inside the measured FWHM. Rows
// whose resonance never drops below half height inside the window cap are
// flagged unresolved and skipped in the minimum.
FwhmScan fwhm_vs_theta(const CavityParams& base, std::span<const double> thetas,
                       double epsilon, int workers = 1,
                       int points_per_window = 161,
                       int min_samples_in_fwhm = 20);

}  // namespace eitsim
