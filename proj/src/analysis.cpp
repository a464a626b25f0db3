#include "eitsim/analysis.hpp"
#include "eitsim/errors.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace eitsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_grid(std::span<const double> grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("sweep: grid needs at least 3 points");
    const bool increasing = grid[1] > grid[0];
    for (size_t i = 1; i < grid.size(); ++i) {
        const bool step_up = grid[i] > grid[i - 1];
        if (step_up != increasing || grid[i] == grid[i - 1])
            throw std::invalid_argument("sweep: grid must be strictly monotonic");
    }
}

}  // namespace

SweepResult sweep(std::span<const double> grid, const PointSolver& solve_point,
                  int workers) {
    validate_grid(grid);
    const size_t n = grid.size();
    SweepResult result;
    result.rows.resize(n);

    std::atomic<size_t> cursor{0};
    auto run = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= n) return;
            SweepRow& row = result.rows[i];
            row.x = grid[i];
            try {
                PointSolution sol = solve_point(grid[i]);
                row.obs = sol.obs;
                row.residual = sol.residual;
                row.n_max = sol.n_max;
                row.ok = true;
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
        }
    };

    const int pool = std::clamp<int>(workers, 1, static_cast<int>(n));
    if (pool <= 1) {
        run();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (int t = 0; t < pool; ++t) threads.emplace_back(run);
        for (auto& t : threads) t.join();
    }
    return result;
}

void normalize_transmission(SweepResult& result) {
    double peak = 0.0;
    for (const auto& row : result.rows)
        if (row.ok && row.obs.n_mean > peak) peak = row.obs.n_mean;
    if (peak <= 0.0)
        throw SimError(Errc::normalization_undefined, "no positive n_mean in sweep");
    result.n_norm.resize(result.rows.size());
    for (size_t i = 0; i < result.rows.size(); ++i)
        result.n_norm[i] = result.rows[i].ok ? result.rows[i].obs.n_mean / peak : kNaN;
}

PeakStats fwhm(std::span<const double> xs, std::span<const double> ys,
               double window_lo, double window_hi) {
    if (xs.size() != ys.size() || xs.size() < 3)
        throw std::invalid_argument("fwhm: need matching arrays with >= 3 samples");
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            throw std::invalid_argument("fwhm: x values must be increasing");

    // Window index range.
    size_t a = 0;
    while (a < xs.size() && xs[a] < window_lo) ++a;
    size_t b = xs.size();
    while (b > 0 && xs[b - 1] > window_hi) --b;
    if (b < a + 3) throw std::invalid_argument("fwhm: window holds fewer than 3 samples");

    size_t m = a;
    for (size_t i = a; i < b; ++i)
        if (ys[i] > ys[m]) m = i;
    if (m == a || m == b - 1)
        throw SimError(Errc::unresolved_peak, "peak at window edge");

    // Parabolic refinement through the three samples around the maximum.
    const double x0 = xs[m - 1], x1 = xs[m], x2 = xs[m + 1];
    const double y0 = ys[m - 1], y1 = ys[m], y2 = ys[m + 1];
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = ((y2 - y1) / (x2 - x1) - d1) / (x2 - x0);
    double center = x1;
    double height = y1;
    if (d2 < 0.0) {
        center = 0.5 * (x0 + x1) - d1 / (2.0 * d2);
        height = y0 + d1 * (center - x0) + d2 * (center - x0) * (center - x1);
    }
    const double half = 0.5 * height;

    int maxima_above_half = 0;
    for (size_t i = a + 1; i + 1 < b; ++i)
        if (ys[i] > ys[i - 1] && ys[i] >= ys[i + 1] && ys[i] >= half)
            ++maxima_above_half;
    if (maxima_above_half > 1)
        throw SimError(Errc::ambiguous_peak,
                       std::to_string(maxima_above_half) + " maxima above half height");

    PeakStats out;
    out.center = center;
    out.height = height;
    out.left_half = kNaN;
    out.right_half = kNaN;

    for (size_t j = m; j > a; --j) {
        if (ys[j - 1] < half && half <= ys[j]) {
            out.left_half =
                xs[j - 1] + (half - ys[j - 1]) / (ys[j] - ys[j - 1]) * (xs[j] - xs[j - 1]);
            break;
        }
    }
    for (size_t j = m; j + 1 < b; ++j) {
        if (ys[j + 1] < half && half <= ys[j]) {
            out.right_half =
                xs[j] + (ys[j] - half) / (ys[j] - ys[j + 1]) * (xs[j + 1] - xs[j]);
            break;
        }
    }
    out.resolved = std::isfinite(out.left_half) && std::isfinite(out.right_half);
    if (out.resolved) out.fwhm = out.right_half - out.left_half;
    return out;
}

PeakStats fwhm(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty()) throw std::invalid_argument("fwhm: empty input");
    return fwhm(xs, ys, xs.front(), xs.back());
}

namespace {

// One adaptation round of the dark-resonance width measurement: sample
// n_mean on a symmetric window and walk outward from Delta_p = 0.
struct DescentProbe {
    std::vector<double> xs;
    std::vector<double> ys;
    bool center_ok = false;
    double center_value = 0.0;
    double left = kNaN;
    double right = kNaN;
    bool rose_before_half = false;  // contrast < 2 inside this window
    int inside = 0;                 // samples strictly inside (left, right)
};

DescentProbe probe_window(const CavityParams& p, double half_width, int npts,
                           int workers) {
    DescentProbe out;
    out.xs.resize(npts);
    for (int i = 0; i < npts; ++i)
        out.xs[i] = -half_width + 2.0 * half_width * i / (npts - 1);
    out.xs[npts / 2] = 0.0;  // guard against rounding; npts is odd

    SweepResult sw = sweep(out.xs, [&](double delta) {
        CavityParams q = p;
        q.delta_p = delta;
        CavitySolution sol = solve_cavity_steady(q);
        return PointSolution{sol.obs, sol.state.residual, sol.n_max};
    }, workers);

    out.ys.resize(npts);
    for (int i = 0; i < npts; ++i)
        out.ys[i] = sw.rows[i].ok ? sw.rows[i].obs.n_mean : kNaN;

    const int i0 = npts / 2;
    if (!std::isfinite(out.ys[i0]) || out.ys[i0] <= 0.0) return out;
    out.center_ok = true;
    out.center_value = out.ys[i0];
    const double half = 0.5 * out.center_value;

    auto walk = [&](int step) -> double {
        double prev = out.ys[i0];
        for (int i = i0 + step; i >= 0 && i < npts; i += step) {
            const double y = out.ys[i];
            if (!std::isfinite(y)) return kNaN;
            if (y < half) {
                const double x_in = out.xs[i - step], x_out = out.xs[i];
                return x_in + (prev - half) / (prev - y) * (x_out - x_in);
            }
            if (y > prev) {  // profile turned up before dropping below half
                out.rose_before_half = true;
                return kNaN;
            }
            prev = y;
        }
        return kNaN;  // ran off the window
    };

    out.left = walk(-1);
    out.right = walk(+1);
    if (std::isfinite(out.left) && std::isfinite(out.right))
        for (double x : out.xs)
            if (x > out.left && x < out.right) ++out.inside;
    return out;
}

}  // namespace

FwhmScan fwhm_vs_theta(const CavityParams& base, std::span<const double> thetas,
                       double epsilon, int workers, int points_per_window,
                       int min_samples_in_fwhm) {
    if (points_per_window < 21)
        throw std::invalid_argument("fwhm_vs_theta: points_per_window too small");
    const int npts = points_per_window | 1;  // force odd so Delta_p = 0 is sampled

    FwhmScan scan;
    scan.rows.reserve(thetas.size());

    for (double theta : thetas) {
        CavityParams p = base;
        p.theta = theta;
        p.epsilon = epsilon;

        const double cap = 4.0 * p.kappa;
        double half_width = 2.0 * p.kappa;

        FwhmRow row;
        row.theta = theta;
        for (int round = 0; round < 25; ++round) {
            DescentProbe probe = probe_window(p, half_width, npts, workers);
            if (!probe.center_ok || probe.rose_before_half) break;  // dead resonance
            if (!std::isfinite(probe.left) || !std::isfinite(probe.right)) {
                if (half_width >= cap) break;
                half_width = std::min(cap, 2.0 * half_width);
                continue;
            }
            if (probe.inside >= min_samples_in_fwhm) {
                try {
                    row.stats = fwhm(probe.xs, probe.ys);
                    row.resolved = row.stats.resolved;
                } catch (const SimError&) {
                    row.resolved = false;
                }
                break;
            }
            // Zoom onto the measured width; keep the window symmetric since
            // the resonance sits at Delta_p = 0 by symmetry.
            half_width = 2.0 * (probe.right - probe.left);
        }
        scan.rows.push_back(std::move(row));
    }

    for (const auto& row : scan.rows) {
        if (!row.resolved) continue;
        if (!scan.min_fwhm || row.stats.fwhm < *scan.min_fwhm) {
            scan.min_fwhm = row.stats.fwhm;
            scan.theta_at_min = row.theta;
        }
    }
    return scan;
}

}  // namespace eitsim
