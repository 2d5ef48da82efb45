#pragma once

#include <string>

namespace gcs {

/// A rank-one Lie algebra with triangular basis {g_-, h, g_+} is fixed by the
/// three structure constants in
///
///     [h, g_pm] = alpha_pm g_pm,   [g_+, g_-] = beta h.
///
/// The two classical real forms used throughout are provided as built-ins.
struct AlgebraSpec {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double beta = 0.0;
    std::string name;

    static AlgebraSpec su2()  { return {+1.0, -1.0, +2.0, "su2"}; }
    static AlgebraSpec su11() { return {+1.0, -1.0, -2.0, "su11"}; }
};

enum class Extremal { LowestWeight, HighestWeight };

/// Identifies a unitary irrep for overlap purposes: the kind of extremal
/// vector the coherent states are built from and the eigenvalue nu0 of the
/// diagonal generator on it. Everything else about the representation is
/// irrelevant to the overlap.
struct RepSpec {
    Extremal extremal = Extremal::LowestWeight;
    double nu0 = 0.0;
    std::string label;

    /// su(2) spin-j representation from the m = -j vector. 2j must be a
    /// nonnegative integer.
    static RepSpec spin_j(double j);

    /// su(1,1) two-mode representation with Bargmann index k = (n0+1)/2.
    static RepSpec two_mode(int n0);

    /// su(1,1) one-mode (squeeze) representations, k = 1/4 and k = 3/4.
    static RepSpec one_mode_even();
    static RepSpec one_mode_odd();

    /// Generic su(1,1)-type lowest-weight representation with index k > 0.
    static RepSpec su11_k(double k);

    /// Highest-weight representation with diagonal eigenvalue -h_prime;
    /// this is the shape used by the Virasoro subalgebra states.
    static RepSpec hwv_weight(double h_prime);
};

/// Throws std::invalid_argument if the shift operators would not shift.
void validate(const AlgebraSpec& alg);

/// Falling factorial x(x-1)...(x-n+1); 1 for n = 0.
double falling_factorial(double x, unsigned n);

/// Series coefficient with a log-magnitude/sign channel. The raw value
/// saturates to +-DBL_MAX with overflow=true instead of producing inf; the
/// log channel stays exact far beyond that.
struct Coeff {
    double value = 1.0;   ///< saturated raw value
    double log_abs = 0.0; ///< log(|coefficient|), -inf when zero
    int sign = 1;         ///< -1, 0, +1
    bool overflow = false;

    bool is_zero() const { return sign == 0; }
};

/// Coefficient of z^n/n! in the unnormalized overlap series built from the
/// lowest weight vector:
///
///     P(n) = (-1)^n (beta*alpha_minus/2)^n * ff(2 nu0/alpha_minus, n)
///
/// Requires rep.extremal == LowestWeight.
Coeff series_coeff_lwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n);

/// Coefficient of z^n/n! in the unnormalized overlap series built from the
/// highest weight vector:
///
///     Q(n) = (beta*alpha_plus/2)^n * ff(2 nu0/alpha_plus, n)
///
/// Requires rep.extremal == HighestWeight. For an HWV with nu0 = -h' and
/// su(1,1) constants this is the rising product 2h'(2h'+1)...(2h'+n-1),
/// which is also what the matrix oracle forces: Q(n) n! = <h0|K+^n K-^n|h0>
/// is a squared norm and cannot alternate in sign.
Coeff series_coeff_hwv(const AlgebraSpec& alg, const RepSpec& rep, unsigned n);

/// The scalar picked up when one lowering operator is commuted through n
/// raising operators onto the lowest weight vector:
///
///     sigma(n) = n(n-1)/2 beta*alpha_minus - n beta nu0.
///
/// Chains to the series coefficient: prod_{m<=n} sigma(m) = P(n) n!.
double sigma_step(const AlgebraSpec& alg, const RepSpec& rep, unsigned n);

/// Ratio C(n)/C(n-1) of consecutive series coefficients for either branch;
/// this is what the term recurrence of the overlap series consumes. Zero
/// exactly when the series terminates at order n.
double coeff_ratio(const AlgebraSpec& alg, const RepSpec& rep, unsigned n);

/// |coeff_ratio| in the n -> infinity limit; |z| times this must stay below
/// one for a non-terminating series to converge.
double asymptotic_ratio(const AlgebraSpec& alg, const RepSpec& rep);

/// True when the coefficient sequence vanishes identically from some order
/// on (the falling factorial argument is a nonnegative integer), so the
/// series is a polynomial in z.
bool series_terminates(const AlgebraSpec& alg, const RepSpec& rep);

} // namespace gcs
