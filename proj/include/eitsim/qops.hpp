#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eitsim {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// One Lindblad channel: rate Gamma and collapse operator C, entering the
// master equation as (Gamma/2)(2 C rho C+ - C+C rho - rho C+C).
struct CollapseOp {
    double rate;
    Operator op;
};

// Liouvillian acting on column-vectorized density matrices.
// `dim` is the Hilbert-space dimension d; `mat` is d^2 x d^2.
struct SuperOperator {
    Eigen::Index dim;
    Eigen::MatrixXcd mat;
};

bool is_hermitian(const Operator& a, double tol = 1e-12);

// |k><l| on a `dim`-dimensional space, indices 1-based as in sigma_kl.
Operator projector(int k, int l, int dim);

// Lowering operator on the Fock space truncated at n_max (dimension n_max+1):
// a[n, n+1] = sqrt(n+1).
Operator annihilation(int n_max);

// Kronecker product; repo-wide ordering is emitter (x) field.
Operator tensor(const Operator& a, const Operator& b);

// Column-stacking vectorization and its inverse.
ComplexVector vec(const Operator& rho);
Operator devec(const ComplexVector& v);

// Assembles L such that devec(L vec(rho)) = -i[H, rho] + sum of dissipators.
// Column-stacking convention:
//   L = -i (I (x) H - H^T (x) I)
//     + sum (rate/2) [ 2 conj(C) (x) C - I (x) C+C - (C+C)^T (x) I ].
SuperOperator liouvillian(const Operator& hamiltonian,
                          std::span<const CollapseOp> collapse_ops);

}  // namespace eitsim
