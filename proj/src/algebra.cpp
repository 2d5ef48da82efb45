#include "gcs/algebra.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gcs {

namespace {

bool is_nonneg_integer(double x) {
    return x >= 0.0 && x == std::floor(x);
}

std::string fmt_label(const char* prefix, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%g", prefix, v);
    return buf;
}

/// Shared core of the two coefficient branches: s^n * ff(x, n) accumulated
/// factor by factor, with the saturating value channel and the exact
/// log/sign channel kept in lockstep.
Coeff scaled_product(double s, double x, unsigned n) {
    Coeff c;
    double value = 1.0;
    double log_abs = 0.0;
    int sign = 1;
    bool overflow = false;
    for (unsigned i = 0; i < n; ++i) {
        const double factor = s * (x - static_cast<double>(i));
        if (factor == 0.0) {
            return Coeff{0.0, -std::numeric_limits<double>::infinity(), 0, false};
        }
        sign *= (factor > 0.0) ? 1 : -1;
        log_abs += std::log(std::abs(factor));
        if (!overflow) {
            value *= factor;
            if (!std::isfinite(value)) {
                overflow = true;
            }
        }
    }
    if (overflow) {
        value = (sign > 0 ? 1.0 : -1.0) * std::numeric_limits<double>::max();
    }
    c.value = value;
    c.log_abs = log_abs;
    c.sign = sign;
    c.overflow = overflow;
    return c;
}

} // namespace

RepSpec RepSpec::spin_j(double j) {
    if (!(j >= 0.0) || !is_nonneg_integer(2.0 * j)) {
        throw std::invalid_argument("spin_j: 2j must be a nonnegative integer");
    }
    return RepSpec{Extremal::LowestWeight, -j, fmt_label("j=", j)};
}

RepSpec RepSpec::two_mode(int n0) {
    if (n0 < 0) {
        throw std::invalid_argument("two_mode: n0 must be nonnegative");
    }
    return RepSpec{Extremal::LowestWeight, (n0 + 1) / 2.0, fmt_label("two-mode n0=", n0)};
}

RepSpec RepSpec::one_mode_even() {
    return RepSpec{Extremal::LowestWeight, 0.25, "one-mode k=1/4"};
}

RepSpec RepSpec::one_mode_odd() {
    return RepSpec{Extremal::LowestWeight, 0.75, "one-mode k=3/4"};
}

RepSpec RepSpec::su11_k(double k) {
    if (!(k > 0.0)) {
        throw std::invalid_argument("su11_k: k must be positive");
    }
    return RepSpec{Extremal::LowestWeight, k, fmt_label("k=", k)};
}

RepSpec RepSpec::hwv_weight(double h_prime) {
    if (!(h_prime > 0.0)) {
        throw std::invalid_argument("hwv_weight: h' must be positive");
    }
    return RepSpec{Extremal::HighestWeight, -h_prime, fmt_label("h'=", h_prime)};
}

void validate(const AlgebraSpec& alg) {
    if (alg.alpha_plus == 0.0 || alg.alpha_minus == 0.0) {
        throw std::invalid_argument("AlgebraSpec: alpha_plus and alpha_minus must be nonzero");
    }
    if (!std::isfinite(alg.alpha_plus) || !std::isfinite(alg.alpha_minus) ||
        !std::isfinite(alg.beta)) {
        throw std::invalid_argument("AlgebraSpec: structure constants must be finite");
    }
}

double falling_factorial(double x, unsigned n) {
    double p = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        p *= x - static_cast<double>(i);
    }
    return p;
}

Coeff series_coeff_lwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    validate(alg);
    if (rep.extremal != Extremal::LowestWeight) {
        throw std::invalid_argument("series_coeff_lwv: representation must be lowest-weight");
    }
    // P(n) = (-1)^n (beta a-/2)^n ff(2 nu0/a-, n): fold the sign and the
    // power into one per-factor scale -beta a-/2.
    const double s = -alg.beta * alg.alpha_minus / 2.0;
    const double x = 2.0 * rep.nu0 / alg.alpha_minus;
    return scaled_product(s, x, n);
}

Coeff series_coeff_hwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    validate(alg);
    if (rep.extremal != Extremal::HighestWeight) {
        throw std::invalid_argument("series_coeff_hwv: representation must be highest-weight");
    }
    const double s = alg.beta * alg.alpha_plus / 2.0;
    const double x = 2.0 * rep.nu0 / alg.alpha_plus;
    return scaled_product(s, x, n);
}

double sigma_step(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    validate(alg);
    if (n < 1) {
        throw std::invalid_argument("sigma_step: n must be >= 1");
    }
    if (rep.extremal != Extremal::LowestWeight) {
        throw std::invalid_argument("sigma_step: representation must be lowest-weight");
    }
    const double nn = static_cast<double>(n);
    return nn * (nn - 1.0) / 2.0 * alg.beta * alg.alpha_minus - nn * alg.beta * rep.nu0;
}

double coeff_ratio(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    validate(alg);
    if (n < 1) {
        throw std::invalid_argument("coeff_ratio: n must be >= 1");
    }
    if (rep.extremal == Extremal::LowestWeight) {
        const double s = -alg.beta * alg.alpha_minus / 2.0;
        const double x = 2.0 * rep.nu0 / alg.alpha_minus;
        return s * (x - static_cast<double>(n - 1));
    }
    const double s = alg.beta * alg.alpha_plus / 2.0;
    const double x = 2.0 * rep.nu0 / alg.alpha_plus;
    return s * (x - static_cast<double>(n - 1));
}

double asymptotic_ratio(const AlgebraSpec& alg, const RepSpec& rep) {
    validate(alg);
    const double alpha = (rep.extremal == Extremal::LowestWeight) ? alg.alpha_minus
                                                                  : alg.alpha_plus;
    return std::abs(alg.beta * alpha / 2.0);
}

bool series_terminates(const AlgebraSpec& alg, const RepSpec& rep) {
    validate(alg);
    const double alpha = (rep.extremal == Extremal::LowestWeight) ? alg.alpha_minus
                                                                  : alg.alpha_plus;
    return is_nonneg_integer(2.0 * rep.nu0 / alpha);
}

} // namespace gcs
