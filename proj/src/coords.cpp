#include "gcs/coords.hpp"

#include "gcs/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace gcs {

using std::complex;

BchDecomposition omega_to_tau_su11(double rho, double phi) {
    if (!std::isfinite(rho) || rho < 0.0) {
        throw std::invalid_argument("omega_to_tau_su11: rho must be finite and >= 0");
    }
    BchDecomposition d;
    d.rho = rho;
    d.phi = phi;
    d.tau = std::polar(std::tanh(rho), phi);
    // ln(1/cosh^2 rho), written to stay accurate for large rho.
    d.eta = -2.0 * (rho + std::log1p(std::expm1(-2.0 * rho) / 2.0));
    return d;
}

std::complex<double> omega_to_tau_su2(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= M_PI)) {
        throw std::invalid_argument("omega_to_tau_su2: theta must lie in [0, pi]");
    }
    if (theta == M_PI) {
        throw ProjectiveInfinityError("omega_to_tau_su2: theta = pi has no finite coordinate");
    }
    return std::polar(std::tan(theta / 2.0), phi);
}

BchDecomposition virasoro_to_tau(double xi_modulus, double xi_phase, int k) {
    if (k < 1) {
        throw std::invalid_argument("virasoro_to_tau: k must be >= 1");
    }
    return omega_to_tau_su11(k * xi_modulus, -xi_phase);
}

double hwv_norm_sqrt(const BchDecomposition& d, double h_prime) {
    return std::exp(-h_prime * d.eta);
}

Eigen::Matrix2cd split_basis_displacement(double rho, double phi) {
    const complex<double> i(0.0, 1.0);
    const double ch = std::cosh(rho);
    const double sh = std::sinh(rho);
    Eigen::Matrix2cd m;
    m << ch, i * std::polar(sh, phi),
        -i * std::polar(sh, -phi), ch;
    return m;
}

Eigen::Matrix2cd split_basis_bch_product(const BchDecomposition& d) {
    const complex<double> i(0.0, 1.0);
    // K+ = [[0, i], [0, 0]], K- = [[0, 0], [i, 0]], K0 = diag(1/2, -1/2);
    // the outer exponentials truncate because K+- are nilpotent.
    Eigen::Matrix2cd lower = Eigen::Matrix2cd::Identity();
    lower(1, 0) = -i * std::conj(d.tau);
    Eigen::Matrix2cd cartan = Eigen::Matrix2cd::Zero();
    cartan(0, 0) = std::exp(-d.eta / 2.0);
    cartan(1, 1) = std::exp(d.eta / 2.0);
    Eigen::Matrix2cd upper = Eigen::Matrix2cd::Identity();
    upper(0, 1) = i * d.tau;
    return lower * cartan * upper;
}

} // namespace gcs
