#pragma once

namespace cylqd::specfun {

inline constexpr int max_order = 60;
inline constexpr double max_argument = 1e4;

/// Bessel function of the first kind J_n(x), 0 <= n <= 60, 0 <= x <= 1e4.
///
/// Ascending series where it has no cancellation, otherwise Miller's
/// normalised downward recurrence carried in double-double so that values
/// near the zeros keep their relative accuracy.
double bessel_j(int n, double x);

/// dJ_n/dx. J'_0 = -J_1; J'_n = J_{n-1} - (n/x) J_n. x = 0 with n >= 1 is rejected.
double bessel_j_prime(int n, double x);

/// J_{n-1}(x) and J_n(x) from one recurrence pass (n >= 1), plus J'_n.
struct JPair {
    double prev;
    double value;
    double prime;
};
JPair bessel_j_pair(int n, double x);

/// Modified Bessel function of the second kind K_n(x), x > 0.
/// Throws UnderflowError when the result is below the smallest normal double.
double bessel_k(int n, double x);

/// e^x K_n(x).
double bessel_k_scaled(int n, double x);

double bessel_k_prime(int n, double x);

/// e^x K'_n(x).
double bessel_k_prime_scaled(int n, double x);

/// e^x K_n(x) and e^x K'_n(x) together (one recurrence pass).
struct KPair {
    double value;
    double prime;
};
KPair bessel_k_scaled_pair(int n, double x);

} // namespace cylqd::specfun
