#pragma once

#include <Eigen/Dense>

#include <complex>

namespace gcs {

/// Normal-ordered factorization of a displacement D(Omega):
///
///     D(Omega) = e^{-conj(tau) X_-} e^{-eta H} e^{tau X_+}
///
/// tau is the disk coordinate of the state, eta the Cartan exponent. The
/// polar chart of origin is kept so the factorization can be re-multiplied
/// and checked against the direct group element.
struct BchDecomposition {
    std::complex<double> tau;
    double eta = 0.0;
    double rho = 0.0;
    double phi = 0.0;
};

/// Disk coordinates of the su(1,1) displacement with Omega = rho e^{i phi}:
/// tau = e^{i phi} tanh(rho), eta = -2 ln cosh(rho).
BchDecomposition omega_to_tau_su11(double rho, double phi);

/// Projective coordinate of the su(2) displacement with Omega = (theta/2)
/// e^{i phi}: tau = e^{i phi} tan(theta/2). The map is fixed (including its
/// phase) by requiring that the tau-chart and (theta, phi)-chart overlap
/// expressions agree identically. Throws ProjectiveInfinityError at
/// theta = pi, which has no finite coordinate.
std::complex<double> omega_to_tau_su2(double theta, double phi);

/// Disk coordinates of the Virasoro subalgebra state labeled xi = R e^{i
/// delta} in the mode-k subalgebra: the effective su(1,1) displacement is
/// Omega = k conj(xi), so tau = e^{-i delta} tanh(kR) and eta = -2 ln
/// cosh(kR). Equals omega_to_tau_su11(k R, -delta).
BchDecomposition virasoro_to_tau(double xi_modulus, double xi_phase, int k);

/// Square root of the normalization of the highest-weight state at this
/// decomposition: N^{1/2} = cosh^{2h'}(rho) = exp(-h' eta). The sign of the
/// exponent is pinned by <tau|tau> = 1 (equivalently N >= 1).
double hwv_norm_sqrt(const BchDecomposition& d, double h_prime);

/// Direct 2x2 split-basis displacement matrix for Omega = rho e^{i phi}:
///
///     [ cosh rho              i e^{i phi} sinh rho ]
///     [ -i e^{-i phi} sinh rho            cosh rho ]
Eigen::Matrix2cd split_basis_displacement(double rho, double phi);

/// Re-multiplied BCH factor product e^{-conj(tau) K_-} e^{-eta K_0}
/// e^{tau K_+} in the split basis; matches split_basis_displacement at the
/// decomposition's chart of origin.
Eigen::Matrix2cd split_basis_bch_product(const BchDecomposition& d);

} // namespace gcs
