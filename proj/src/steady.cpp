#include "eitsim/steady.hpp"
#include "eitsim/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eitsim {

namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr double kNullSpaceThreshold = 1e-10;  // relative to largest singular value

Complex trace_of(const ComplexVector& x, Eigen::Index d) {
    Complex t = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) t += x(k * d + k);
    return t;
}

}  // namespace

double DensityMatrix::trace_error() const {
    return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Operator herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix solve_steady(const SuperOperator& liouvillian) {
    const Eigen::Index d = liouvillian.dim;
    const Eigen::Index n = d * d;
    const Eigen::MatrixXcd& L = liouvillian.mat;
    if (L.rows() != n || L.cols() != n)
        throw std::invalid_argument("solve_steady: superoperator shape mismatch");

    // Pick the row to sacrifice for the trace constraint.
    Eigen::Index worst = 0;
    double worst_deficit = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double diag = std::abs(L(i, i));
        const double off = L.row(i).cwiseAbs().sum() - diag;
        const double deficit = off - diag;
        if (deficit > worst_deficit) {
            worst_deficit = deficit;
            worst = i;
        }
    }

    Eigen::MatrixXcd bordered = L;
    bordered.row(worst).setZero();
    for (Eigen::Index k = 0; k < d; ++k) bordered(worst, k * d + k) = 1.0;
    ComplexVector rhs = ComplexVector::Zero(n);
    rhs(worst) = 1.0;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(bordered);
    ComplexVector x = lu.solve(rhs);

    double residual = (L * x).cwiseAbs().maxCoeff();
    if (std::isfinite(residual) && residual < kResidualTolerance)
        return DensityMatrix{devec(x), residual};

    // Diagnosis path: rank structure of L decides between a degenerate model
    // and a genuine factorization failure.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = kNullSpaceThreshold * sv(0);
    int null_dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) < cutoff) ++null_dim;

    if (null_dim > 1)
        throw SimError(Errc::non_unique_steady_state,
                       "Liouvillian null space has dimension " + std::to_string(null_dim));
    if (null_dim == 1) {
        ComplexVector v = svd.matrixV().col(n - 1);
        const Complex t = trace_of(v, d);
        if (std::abs(t) > 1e-12) {
            v /= t;
            residual = (L * v).cwiseAbs().maxCoeff();
            if (std::isfinite(residual) && residual < kResidualTolerance)
                return DensityMatrix{devec(v), residual};
        }
    }
    throw SimError(Errc::singular_system,
                   "steady-state solve failed, residual " + std::to_string(residual));
}

DensityMatrix solve_steady(const Model& model) {
    return solve_steady(liouvillian(model.hamiltonian, model.collapse_ops));
}

Observables observables_lambda(const Operator& rho) {
    if (rho.rows() != 3 || rho.cols() != 3)
        throw std::invalid_argument("observables_lambda: expected a 3x3 state");
    Observables out;
    out.sigma13 = (rho * projector(1, 3, 3)).trace();
    out.p1 = (rho * projector(1, 1, 3)).trace().real();
    out.p2 = (rho * projector(2, 2, 3)).trace().real();
    out.p3 = (rho * projector(3, 3, 3)).trace().real();
    return out;
}

Observables observables_cavity(const Operator& rho, int n_max) {
    const int nf = n_max + 1;
    if (rho.rows() != 3 * nf)
        throw std::invalid_argument("observables_cavity: state/truncation mismatch");
    const Operator eye_f = Operator::Identity(nf, nf);
    const Operator a = annihilation(n_max);

    Observables out;
    out.sigma13 = (rho * tensor(projector(1, 3, 3), eye_f)).trace();
    out.p1 = (rho * tensor(projector(1, 1, 3), eye_f)).trace().real();
    out.p2 = (rho * tensor(projector(2, 2, 3), eye_f)).trace().real();
    out.p3 = (rho * tensor(projector(3, 3, 3), eye_f)).trace().real();
    out.n_mean = (rho * tensor(Operator::Identity(3, 3), a.adjoint() * a)).trace().real();
    out.top_fock_pop =
        (rho * tensor(Operator::Identity(3, 3), projector(nf, nf, nf))).trace().real();
    return out;
}

CavitySolution solve_cavity_steady(const CavityParams& params, double gamma_12_eff,
                                   int forced_n_max) {
    CavityParams p = params;
    int n_max = forced_n_max > 0 ? forced_n_max
                                 : initial_photon_cutoff(p.epsilon, p.kappa);
    for (;;) {
        p.n_max = n_max;
        DensityMatrix state = solve_steady(cavity_model(p, gamma_12_eff));
        Observables obs = observables_cavity(state.rho, n_max);
        if (forced_n_max > 0 || obs.top_fock_pop < kTopFockTolerance)
            return CavitySolution{std::move(state), n_max, obs};
        if (n_max >= kMaxPhotonCutoff)
            throw std::runtime_error(
                "solve_cavity_steady: truncation inadequate at photon cutoff cap " +
                std::to_string(kMaxPhotonCutoff));
        n_max *= 2;
    }
}

}  // namespace eitsim
