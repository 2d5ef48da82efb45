#include "gcs/overlap.hpp"

#include "gcs/errors.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcs {

using std::complex;

std::complex<double> require_tau(const CoherentPoint& p) {
    if (p.chart != Chart::Tau) {
        throw std::invalid_argument("expected a tau-chart point; convert explicitly first");
    }
    return p.value;
}

namespace {

constexpr double kRescaleThreshold = 0x1p900;
constexpr int kRescaleShift = 1024; // kept even so half-exponents stay integral

/// Partial sum in scaled form: value = mant * 2^exp2. exp2 only ever moves
/// in multiples of kRescaleShift.
struct ScaledSum {
    complex<double> mant{0.0, 0.0};
    long exp2 = 0;
    int terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;

    double to_double_mag() const { return std::ldexp(std::abs(mant), static_cast<int>(exp2)); }
};

ScaledSum sum_series(const AlgebraSpec& alg, const RepSpec& rep, complex<double> z,
                     const SeriesConfig& cfg) {
    validate(alg);
    if (!(cfg.tol > 0.0) || cfg.tol >= 1.0) {
        throw std::invalid_argument("SeriesConfig: tol must lie in (0, 1)");
    }
    if (cfg.max_terms < 1) {
        throw std::invalid_argument("SeriesConfig: max_terms must be >= 1");
    }

    const bool terminates = series_terminates(alg, rep);
    const double r_inf = std::abs(z) * asymptotic_ratio(alg, rep);
    if (!terminates && r_inf >= 1.0) {
        throw DomainError("overlap series argument outside the convergence domain (|z| = " +
                          std::to_string(std::abs(z)) + ")");
    }

    ScaledSum s;
    complex<double> term(1.0, 0.0);
    s.mant = term;
    s.terms_used = 1;

    for (int n = 1; n <= cfg.max_terms; ++n) {
        const double step = coeff_ratio(alg, rep, static_cast<unsigned>(n));
        term *= z * (step / static_cast<double>(n));
        if (term == complex<double>(0.0, 0.0)) {
            // Exact termination: every later coefficient carries the same
            // zero factor.
            s.tail_estimate = 0.0;
            s.converged = true;
            return s;
        }
        s.mant += term;
        s.terms_used = n + 1;

        if (std::abs(s.mant) > kRescaleThreshold || std::abs(term) > kRescaleThreshold) {
            s.mant = std::ldexp(1.0, -kRescaleShift) * s.mant;
            term = std::ldexp(1.0, -kRescaleShift) * term;
            s.exp2 += kRescaleShift;
        }

        // Geometric tail bound: once the term ratio sits below 1 with 10%
        // headroom, tail <= |term| * r/(1-r) with r the larger of the next
        // ratio and the asymptotic one (the ratio approaches its limit
        // monotonically from either side).
        const double r_next =
            std::abs(z) * std::abs(coeff_ratio(alg, rep, static_cast<unsigned>(n + 1))) /
            (static_cast<double>(n) + 1.0);
        const double r = std::max(r_next, r_inf);
        if (r < 1.0 / 1.1) {
            const double tail_abs = std::abs(term) * r / (1.0 - r);
            const double scale = std::max(std::abs(s.mant), 1e-300);
            const double tail_rel = tail_abs / scale;
            if (tail_rel <= cfg.tol) {
                s.tail_estimate = tail_rel;
                s.converged = true;
                return s;
            }
        }
    }
    throw NonConvergenceError("overlap series did not converge within " +
                              std::to_string(cfg.max_terms) + " terms");
}

complex<double> cross_argument(const RepSpec& rep, complex<double> tau,
                               complex<double> tau_prime) {
    return rep.extremal == Extremal::LowestWeight ? std::conj(tau) * tau_prime
                                                  : tau * std::conj(tau_prime);
}

/// mant * 2^exp2 as a plain double, saturating to +-DBL_MAX instead of inf.
double scaled_to_double(double mant, long exp2) {
    const long clamped = std::max<long>(std::min<long>(exp2, 4000), -4000);
    const double v = std::ldexp(mant, static_cast<int>(clamped));
    if (std::isinf(v)) {
        return std::copysign(std::numeric_limits<double>::max(), v);
    }
    return v;
}

OverlapResult from_scaled(const ScaledSum& s) {
    OverlapResult r;
    r.value = complex<double>(scaled_to_double(s.mant.real(), s.exp2),
                              scaled_to_double(s.mant.imag(), s.exp2));
    r.magnitude = std::abs(r.value);
    r.terms_used = s.terms_used;
    r.tail_estimate = s.tail_estimate;
    r.converged = s.converged;
    return r;
}

} // namespace

OverlapResult unnormalized_overlap(const AlgebraSpec& alg, const RepSpec& rep,
                                   complex<double> tau, complex<double> tau_prime,
                                   const SeriesConfig& cfg) {
    return from_scaled(sum_series(alg, rep, cross_argument(rep, tau, tau_prime), cfg));
}

double normalization(const AlgebraSpec& alg, const RepSpec& rep, complex<double> tau,
                     const SeriesConfig& cfg) {
    const ScaledSum s = sum_series(alg, rep, cross_argument(rep, tau, tau), cfg);
    assert(std::abs(s.mant.imag()) <= 1e-14 * std::max(1.0, std::abs(s.mant.real())));
    return scaled_to_double(s.mant.real(), s.exp2);
}

OverlapResult overlap(const AlgebraSpec& alg, const RepSpec& rep, complex<double> tau,
                      complex<double> tau_prime, const SeriesConfig& cfg) {
    const ScaledSum m = sum_series(alg, rep, cross_argument(rep, tau, tau_prime), cfg);
    const ScaledSum n = sum_series(alg, rep, cross_argument(rep, tau, tau), cfg);
    const ScaledSum np = sum_series(alg, rep, cross_argument(rep, tau_prime, tau_prime), cfg);

    // All exponents are multiples of an even shift, so the combined
    // exponent below is integral.
    const long e = m.exp2 - (n.exp2 + np.exp2) / 2;
    const complex<double> base = m.mant / std::sqrt(n.mant.real() * np.mant.real());

    OverlapResult r;
    r.value = complex<double>(scaled_to_double(base.real(), e),
                              scaled_to_double(base.imag(), e));
    r.magnitude = std::abs(r.value);
    r.terms_used = std::max(m.terms_used, std::max(n.terms_used, np.terms_used));
    r.tail_estimate = m.tail_estimate + 0.5 * (n.tail_estimate + np.tail_estimate);
    r.converged = m.converged && n.converged && np.converged;
    return r;
}

std::complex<double> ipow(complex<double> z, unsigned n) {
    complex<double> result(1.0, 0.0);
    complex<double> base = z;
    while (n > 0) {
        if (n & 1u) {
            result *= base;
        }
        base *= base;
        n >>= 1u;
    }
    return result;
}

std::complex<double> closed_form_su2(double j, complex<double> tau,
                                     complex<double> tau_prime) {
    const double two_j = 2.0 * j;
    if (!(j >= 0.0) || two_j != std::floor(two_j)) {
        throw std::invalid_argument("closed_form_su2: 2j must be a nonnegative integer");
    }
    const complex<double> num = ipow(1.0 + std::conj(tau) * tau_prime,
                                     static_cast<unsigned>(two_j));
    const double den = std::pow(1.0 + std::norm(tau), j) *
                       std::pow(1.0 + std::norm(tau_prime), j);
    return num / den;
}

std::complex<double> closed_form_su2_omega(double j, double theta, double phi,
                                           double theta_prime, double phi_prime) {
    const double two_j = 2.0 * j;
    if (!(j >= 0.0) || two_j != std::floor(two_j)) {
        throw std::invalid_argument("closed_form_su2_omega: 2j must be a nonnegative integer");
    }
    if (!(theta >= 0.0 && theta <= M_PI) || !(theta_prime >= 0.0 && theta_prime <= M_PI)) {
        throw std::invalid_argument("closed_form_su2_omega: theta must lie in [0, pi]");
    }
    const complex<double> base =
        std::cos(theta / 2.0) * std::cos(theta_prime / 2.0) +
        std::sin(theta / 2.0) * std::sin(theta_prime / 2.0) *
            std::polar(1.0, phi_prime - phi);
    return ipow(base, static_cast<unsigned>(two_j));
}

std::complex<double> closed_form_su11(double k, complex<double> tau,
                                      complex<double> tau_prime) {
    if (!(k > 0.0)) {
        throw std::invalid_argument("closed_form_su11: k must be positive");
    }
    if (std::abs(tau) >= 1.0 || std::abs(tau_prime) >= 1.0) {
        throw DomainError("closed_form_su11: labels must lie inside the unit disk");
    }
    const double num = std::pow(1.0 - std::norm(tau), k) *
                       std::pow(1.0 - std::norm(tau_prime), k);
    const complex<double> den = std::pow(1.0 - std::conj(tau) * tau_prime,
                                         complex<double>(2.0 * k, 0.0));
    return num / den;
}

} // namespace gcs
