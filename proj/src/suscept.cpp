#include "eitsim/suscept.hpp"
#include "eitsim/errors.hpp"
#include "eitsim/steady.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <set>
#include <stdexcept>

namespace eitsim {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex chi1_analytic(double delta_p, double theta, double gamma_total) {
    if (delta_p == 0.0 && theta == 0.0)
        throw std::domain_error("chi1_analytic: undefined at delta_p = theta = 0");
    const Complex denom =
        2.0 * delta_p * (2.0 * delta_p - kI * gamma_total) - theta * theta;
    return 2.0 * delta_p / denom;
}

Complex chi3_analytic(double delta_p, double theta, double gamma_31,
                      double gamma_32) {
    if (gamma_31 <= 0.0)
        throw std::invalid_argument("chi3_analytic: gamma_31 must be > 0");
    if (delta_p == 0.0)
        throw std::domain_error(
            "chi3_analytic: 1/delta_p pole; use chi3_at_resonance_limit");
    const double g = gamma_31 + gamma_32;
    const double th2 = theta * theta;
    const Complex num = g * g * gamma_32 / th2 -
                        kI * g * gamma_32 / (2.0 * delta_p) + 3.0 * g - gamma_31 +
                        gamma_31 * th2 / (2.0 * delta_p * delta_p);
    const Complex left = th2 / (2.0 * delta_p) - kI * g - 2.0 * delta_p;
    const Complex right = th2 / (2.0 * delta_p) + kI * g - 2.0 * delta_p;
    return num / (gamma_31 * left * right * right);
}

Complex chi3_at_resonance_limit(double theta, double gamma_31, double gamma_32) {
    const double g = gamma_31 + gamma_32;
    const double h = 1e-6 * g;
    auto sym = [&](double step) {
        return 0.5 * (chi3_analytic(step, theta, gamma_31, gamma_32) +
                      chi3_analytic(-step, theta, gamma_31, gamma_32));
    };
    // Symmetric averages remove the odd part; one Richardson step in dp^2
    // removes the leading even term.
    const Complex s1 = sym(h);
    const Complex s2 = sym(0.5 * h);
    return (4.0 * s2 - s1) / 3.0;
}

double chi3_im_series(double delta_p, double theta, double gamma_31,
                      double gamma_32) {
    if (gamma_31 <= 0.0)
        throw std::invalid_argument("chi3_im_series: gamma_31 must be > 0");
    if (delta_p == 0.0)
        throw std::domain_error("chi3_im_series: undefined at delta_p = 0");
    const double g = gamma_31 + gamma_32;
    const double d2 = delta_p * delta_p;
    const double w = g * g + 4.0 * d2;

    const double t0 = -2.0 * g * g * (g * g + 2.0 * g * gamma_32 + 4.0 * d2) /
                      (gamma_31 * w * w * w);
    const double t_m2 =
        -g * g * g * gamma_32 / (gamma_31 * theta * theta * w * w);
    const double a = 4.0 * g *
                     (std::pow(g, 4) * (gamma_32 - 2.0 * gamma_31) / (16.0 * d2) -
                      g * g * (3.0 * g + 2.0 * gamma_32) -
                      d2 * (9.0 * g + gamma_31)) /
                     (gamma_31 * std::pow(w, 4));
    return t0 + t_m2 + a * theta * theta;
}

double two_level_p3(double omega_p, double delta_p, double gamma_total) {
    if (gamma_total <= 0.0)
        throw std::invalid_argument("two_level_p3: gamma_total must be > 0");
    const double w2 = omega_p * omega_p;
    return w2 / (gamma_total * gamma_total + 4.0 * delta_p * delta_p + 2.0 * w2);
}

double effective_decay_rate_lambda(double omega_p, double delta_p,
                                   double gamma_3, double gamma_32) {
    if (gamma_32 < 0.0)
        throw std::invalid_argument("effective_decay_rate_lambda: negative rate");
    return two_level_p3(omega_p, delta_p, gamma_3) * gamma_32;
}

double matched_effective_decay_rate_lambda(double omega_p, double delta_p,
                                           double gamma_31, double gamma_32) {
    if (gamma_31 <= 0.0)
        throw std::invalid_argument(
            "matched_effective_decay_rate_lambda: gamma_31 must be > 0");
    const double gamma_3 = gamma_31 + gamma_32;
    return two_level_p3(omega_p, delta_p, gamma_3) * gamma_32 * gamma_3 / gamma_31;
}

std::array<double, 4> default_probe_ladder() {
    return {0.002, 0.004, 0.006, 0.008};
}

SusceptibilityOrders extract_orders(const std::function<Complex(double)>& coherence,
                                    double delta_p, std::span<const double> omegas) {
    if (omegas.size() < 4)
        throw std::invalid_argument("extract_orders: need at least 4 probe samples");
    std::set<double> distinct(omegas.begin(), omegas.end());
    if (distinct.size() != omegas.size())
        throw std::invalid_argument("extract_orders: probe samples must be distinct");

    const Eigen::Index m = static_cast<Eigen::Index>(omegas.size());
    Eigen::MatrixXcd design(m, 3);
    ComplexVector values(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double w = omegas[i];
        design(i, 0) = w;
        design(i, 1) = w * w * w;
        design(i, 2) = w * w * w * w * w;
        values(i) = coherence(w);
    }

    Eigen::Vector3d scale;
    for (int k = 0; k < 3; ++k) scale(k) = design.col(k).norm();
    Eigen::MatrixXcd scaled = design;
    for (int k = 0; k < 3; ++k) scaled.col(k) /= scale(k);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled,
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!std::isfinite(cond) || cond > 1e12)
        throw SimError(Errc::fit_unstable,
                       "condition number " + std::to_string(cond));

    ComplexVector coeff = svd.solve(values);
    for (int k = 0; k < 3; ++k) coeff(k) /= scale(k);

    SusceptibilityOrders out;
    out.delta_p = delta_p;
    out.c1 = coeff(0);
    out.c3 = coeff(1);
    out.c5 = coeff(2);
    out.fit_residual = (design * coeff - values).cwiseAbs().maxCoeff();
    return out;
}

SusceptibilityOrders extract_orders_lambda(const LambdaParams& params,
                                           double delta_p,
                                           std::span<const double> omegas) {
    auto coherence = [&](double omega) {
        LambdaParams p = params;
        p.delta_p = delta_p;
        p.omega_p = omega;
        const DensityMatrix state = solve_steady(lambda_model(p));
        return observables_lambda(state.rho).sigma13;
    };
    return extract_orders(coherence, delta_p, omegas);
}

SusceptibilityOrders extract_orders_lambda(const LambdaParams& params,
                                           double delta_p) {
    const auto ladder = default_probe_ladder();
    return extract_orders_lambda(params, delta_p, ladder);
}

CavitySaturation cavity_saturation(double epsilon, double g, double kappa,
                                   double gamma_3) {
    if (g <= 0.0 || kappa <= 0.0 || gamma_3 <= 0.0)
        throw std::invalid_argument("cavity_saturation: g, kappa, gamma_3 must be > 0");

    CavitySaturation out;
    out.cooperativity = 2.0 * g * g / (kappa * gamma_3);
    // The paper prints n0 = gamma_3 / (8 g^2), which is dimensionally
    // inconsistent; the standard saturation photon number is used instead.
    out.n0 = gamma_3 * gamma_3 / (8.0 * g * g);

    const double drive = epsilon / kappa;
    const double two_c_n0 = 2.0 * out.cooperativity * out.n0;
    auto step = [&](double n) {
        const double amp = drive * (n + out.n0) / (n + out.n0 + two_c_n0);
        return amp * amp;
    };

    double n = 0.0;
    double prev_delta = 0.0;
    bool converged = false;
    for (int it = 0; it < 100000; ++it) {
        double next = step(n);
        double delta = next - n;
        if (it > 0 && delta * prev_delta < 0.0) next = 0.5 * (n + next);  // damp oscillation
        prev_delta = delta;
        const double moved = std::abs(next - n);
        n = next;
        if (moved < 1e-14) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SimError(Errc::no_fixed_point, "saturation iteration did not converge");

    out.n = n;
    const double inversion = -out.n0 / (n + out.n0);
    out.p3 = 0.5 * (1.0 + inversion);
    return out;
}

}  // namespace eitsim
