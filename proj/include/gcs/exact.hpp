#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gcs/algebra.hpp"

#include <stdexcept>

namespace gcs::exact {

/// Exact-rational twin of the coefficient chain. Structure constants and
/// 2 nu0 / alpha_pm are dyadic rationals in every built-in representation,
/// so converting the double fields is lossless and the identities below hold
/// as exact equalities, not just to tolerance. This anchors the
/// floating-point path in tests.
using Rational = boost::multiprecision::cpp_rational;

inline Rational falling_factorial(const Rational& x, unsigned n) {
    Rational p = 1;
    for (unsigned i = 0; i < n; ++i) {
        p *= x - i;
    }
    return p;
}

inline Rational factorial(unsigned n) {
    Rational f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline Rational series_coeff_lwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    if (rep.extremal != Extremal::LowestWeight) {
        throw std::invalid_argument("exact::series_coeff_lwv: representation must be lowest-weight");
    }
    const Rational s = -Rational(alg.beta) * Rational(alg.alpha_minus) / 2;
    const Rational x = 2 * Rational(rep.nu0) / Rational(alg.alpha_minus);
    Rational p = 1;
    for (unsigned i = 0; i < n; ++i) {
        p *= s * (x - i);
    }
    return p;
}

inline Rational series_coeff_hwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    if (rep.extremal != Extremal::HighestWeight) {
        throw std::invalid_argument("exact::series_coeff_hwv: representation must be highest-weight");
    }
    const Rational s = Rational(alg.beta) * Rational(alg.alpha_plus) / 2;
    const Rational x = 2 * Rational(rep.nu0) / Rational(alg.alpha_plus);
    Rational p = 1;
    for (unsigned i = 0; i < n; ++i) {
        p *= s * (x - i);
    }
    return p;
}

inline Rational sigma_step(const AlgebraSpec& alg, const RepSpec& rep, unsigned n) {
    if (rep.extremal != Extremal::LowestWeight) {
        throw std::invalid_argument("exact::sigma_step: representation must be lowest-weight");
    }
    const Rational nn = n;
    return nn * (nn - 1) / 2 * Rational(alg.beta) * Rational(alg.alpha_minus)
         - nn * Rational(alg.beta) * Rational(rep.nu0);
}

} // namespace gcs::exact
