#pragma once

#include "gcs/algebra.hpp"

#include <complex>

namespace gcs {

enum class Chart { Tau, Omega };

/// A coherent-state label together with the chart it lives in. Operations
/// state which chart they expect; there is no implicit conversion between
/// charts (use the coords module).
struct CoherentPoint {
    Chart chart = Chart::Tau;
    std::complex<double> value{0.0, 0.0};
    double rho = 0.0; ///< polar form, meaningful for the Omega chart
    double phi = 0.0;

    static CoherentPoint tau(std::complex<double> v) {
        return CoherentPoint{Chart::Tau, v, std::abs(v), std::arg(v)};
    }
    static CoherentPoint omega(double rho, double phi) {
        return CoherentPoint{Chart::Omega, std::polar(rho, phi), rho, phi};
    }
};

/// Returns the tau-chart value; throws std::invalid_argument on a chart
/// mismatch.
std::complex<double> require_tau(const CoherentPoint& p);

struct SeriesConfig {
    double tol = 1e-12; ///< relative tail tolerance
    int max_terms = 10000;
};

struct OverlapResult {
    std::complex<double> value{0.0, 0.0};
    double magnitude = 0.0;
    int terms_used = 0;
    double tail_estimate = 0.0; ///< relative estimated tail, 0 for exact termination
    bool converged = false;
};

/// Overlap of two *unnormalized* coherent states,
///
///     M(tau, tau') = sum_n z^n/n! C(n),
///
/// with z = conj(tau) tau' and C the LWV coefficients, or z = tau conj(tau')
/// and C the HWV coefficients, by the extremal kind of rep. Terminating
/// series are summed exactly; otherwise summation stops once a geometric
/// tail bound falls below cfg.tol relative to the partial sum.
///
/// Throws DomainError when z lies outside the convergence domain of a
/// non-terminating series (the unit disk for the built-in algebras) and
/// NonConvergenceError when cfg.max_terms is exhausted first.
OverlapResult unnormalized_overlap(const AlgebraSpec& alg, const RepSpec& rep,
                                   std::complex<double> tau, std::complex<double> tau_prime,
                                   const SeriesConfig& cfg = {});

/// Squared norm N(tau) of the unnormalized state; real and >= 1. Any
/// floating-point imaginary residue is asserted tiny and dropped.
double normalization(const AlgebraSpec& alg, const RepSpec& rep,
                     std::complex<double> tau, const SeriesConfig& cfg = {});

/// Normalized overlap <tau|tau'> = M(tau,tau') / sqrt(N(tau) N(tau')),
/// computed through the series (never the closed forms); |value| <= 1 up to
/// roundoff. Intermediate magnitudes are carried in scaled form so the
/// quotient stays finite even when the factors would overflow on their own.
OverlapResult overlap(const AlgebraSpec& alg, const RepSpec& rep,
                      std::complex<double> tau, std::complex<double> tau_prime,
                      const SeriesConfig& cfg = {});

/// Spin-j overlap in projective coordinates:
///
///     (1 + conj(tau) tau')^{2j} / [(1+|tau|^2)^j (1+|tau'|^2)^j]
///
/// The numerator exponent is 2j: that is what the terminating series sums
/// to, and the only choice with <tau|tau> = 1.
std::complex<double> closed_form_su2(double j, std::complex<double> tau,
                                     std::complex<double> tau_prime);

/// Spin-j overlap on the sphere chart Omega = (theta, phi):
///
///     (cos(t/2)cos(t'/2) + sin(t/2)sin(t'/2) e^{i(phi'-phi)})^{2j}
std::complex<double> closed_form_su2_omega(double j, double theta, double phi,
                                           double theta_prime, double phi_prime);

/// su(1,1) index-k overlap on the Poincare disk:
///
///     (1-|tau|^2)^k (1-|tau'|^2)^k / (1 - conj(tau) tau')^{2k}
///
/// using the principal branch for non-integer 2k; the branch point is never
/// approached while both labels stay inside the open disk.
std::complex<double> closed_form_su11(double k, std::complex<double> tau,
                                      std::complex<double> tau_prime);

/// z^n by binary exponentiation (exact integer powers, no branch issues).
std::complex<double> ipow(std::complex<double> z, unsigned n);

} // namespace gcs
