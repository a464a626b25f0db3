#include "eitsim/qops.hpp"
#include "eitsim/errors.hpp"

#include <stdexcept>

namespace eitsim {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::non_unique_steady_state: return "NON_UNIQUE_STEADY_STATE";
        case Errc::singular_system: return "SINGULAR_SYSTEM";
        case Errc::fit_unstable: return "FIT_UNSTABLE";
        case Errc::no_fixed_point: return "NO_FIXED_POINT";
        case Errc::ambiguous_peak: return "AMBIGUOUS_PEAK";
        case Errc::unresolved_peak: return "UNRESOLVED";
        case Errc::normalization_undefined: return "NORMALIZATION_UNDEFINED";
    }
    return "UNKNOWN";
}

bool is_hermitian(const Operator& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator projector(int k, int l, int dim) {
    if (dim < 1) throw std::invalid_argument("projector: dim must be positive");
    if (k < 1 || k > dim || l < 1 || l > dim)
        throw std::invalid_argument("projector: index out of range");
    Operator m = Operator::Zero(dim, dim);
    m(k - 1, l - 1) = 1.0;
    return m;
}

Operator annihilation(int n_max) {
    if (n_max < 1) throw std::invalid_argument("annihilation: n_max must be >= 1");
    const int dim = n_max + 1;
    Operator a = Operator::Zero(dim, dim);
    for (int n = 0; n < n_max; ++n) a(n, n + 1) = std::sqrt(double(n + 1));
    return a;
}

Operator tensor(const Operator& a, const Operator& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Operator out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

ComplexVector vec(const Operator& rho) {
    // Eigen matrices are column-major, so the flat view is already the
    // column-stacked vector.
    return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

Operator devec(const ComplexVector& v) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
    if (d * d != v.size()) throw std::invalid_argument("devec: length is not a square");
    return Eigen::Map<const Operator>(v.data(), d, d);
}

SuperOperator liouvillian(const Operator& hamiltonian,
                          std::span<const CollapseOp> collapse_ops) {
    const Eigen::Index d = hamiltonian.rows();
    if (hamiltonian.cols() != d)
        throw std::invalid_argument("liouvillian: Hamiltonian must be square");
    if (!is_hermitian(hamiltonian))
        throw std::invalid_argument("liouvillian: Hamiltonian must be Hermitian");

    const Operator eye = Operator::Identity(d, d);
    const Complex mi(0.0, -1.0);

    Eigen::MatrixXcd L = mi * (tensor(eye, hamiltonian) -
                               tensor(hamiltonian.transpose(), eye));
    for (const auto& [rate, c] : collapse_ops) {
        if (rate < 0.0) throw std::invalid_argument("liouvillian: negative rate");
        if (c.rows() != d || c.cols() != d)
            throw std::invalid_argument("liouvillian: collapse operator dimension mismatch");
        if (rate == 0.0) continue;
        const Operator cdc = c.adjoint() * c;
        L += 0.5 * rate *
             (2.0 * tensor(c.conjugate(), c) - tensor(eye, cdc) -
              tensor(cdc.transpose(), eye));
    }
    return SuperOperator{d, std::move(L)};
}

}  // namespace eitsim
