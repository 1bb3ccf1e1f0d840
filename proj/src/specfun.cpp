#include "cylqd/specfun.hpp"

#include "cylqd/double_double.hpp"
#include "cylqd/errors.hpp"

#include <cfloat>
#include <cmath>
#include <string>

namespace cylqd::specfun {

namespace {

void check_order(int n, const char* who)
{
    if (n < 0 || n > max_order) {
        throw DomainError(std::string(who) + ": order " + std::to_string(n) + " outside [0, 60]");
    }
}

void check_j_argument(double x, const char* who)
{
    if (!(x >= 0.0 && x <= max_argument)) {
        throw DomainError(std::string(who) + ": argument outside [0, 1e4]");
    }
}

void check_k_argument(double x, const char* who)
{
    if (!(x > 0.0 && x <= max_argument)) {
        throw DomainError(std::string(who) + ": argument outside (0, 1e4]");
    }
}

bool use_series(int n, double x)
{
    return x <= 2.0 || x * x <= n + 1.0;
}

// Ascending series; all terms after the first shrink by at least 4x in the
// region selected by use_series, so the alternating sum is well conditioned.
double j_series(int n, double x)
{
    double lead = 1.0;
    for (int j = 1; j <= n; ++j) {
        lead *= 0.5 * x / j;
    }
    if (lead == 0.0) return 0.0;
    const double y = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= y / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return lead * sum;
}

/// J_{n-1}, J_n, J_{n+1} in double-double by normalised downward recurrence.
struct MillerOut {
    DoubleDouble prev;
    DoubleDouble value;
    DoubleDouble next;
};

MillerOut j_miller(int n, double x)
{
    const double top = std::max(static_cast<double>(n), x);
    int big_n = static_cast<int>(top + 20.0 * std::cbrt(x) + 32.0);
    big_n += big_n % 2;

    const DoubleDouble two_over_x = DoubleDouble(2.0) / DoubleDouble(x);
    DoubleDouble f_up{0.0};
    DoubleDouble f{1e-200};
    DoubleDouble sum{0.0};
    MillerOut out{};
    constexpr double rescale_at = 1e250;
    constexpr int rescale_exp = -830;

    // f holds f_k; loop computes f_{k-1}.
    for (int k = big_n; k >= 0; --k) {
        if (k == n + 1) out.next = f;
        if (k == n) out.value = f;
        if (k == n - 1) out.prev = f;
        if (k == 0) {
            sum += f;
        } else if (k % 2 == 0) {
            sum += f * 2.0;
        }
        if (k == 0) break;
        DoubleDouble f_down = two_over_x * static_cast<double>(k) * f - f_up;
        f_up = f;
        f = f_down;
        if (std::abs(f.hi()) > rescale_at) {
            auto shrink = [](DoubleDouble v) {
                return DoubleDouble(std::ldexp(v.hi(), rescale_exp), std::ldexp(v.lo(), rescale_exp));
            };
            f = shrink(f);
            f_up = shrink(f_up);
            sum = shrink(sum);
            out.next = shrink(out.next);
            out.value = shrink(out.value);
            out.prev = shrink(out.prev);
        }
    }
    out.prev = out.prev / sum;
    out.value = out.value / sum;
    out.next = out.next / sum;
    if (n == 0) out.prev = -out.next;
    return out;
}

struct K01 {
    double k0;
    double k1;
};

// Scaled K_0, K_1 for x <= 2 from the logarithmic ascending series. The
// log(x/2) + gamma combination cancels near x = 1.12, so the sums run in
// double-double.
K01 k01_series(double x, bool scaled)
{
    const DoubleDouble y = DoubleDouble(x) * x * 0.25;
    const DoubleDouble log_half = dd_log(0.5 * x);
    const DoubleDouble one{1.0};

    DoubleDouble t0 = one;  // y^k / (k!)^2
    DoubleDouble t1 = one;  // y^k / (k! (k+1)!)
    DoubleDouble harmonic{0.0};  // H_k
    DoubleDouble i0 = one;
    DoubleDouble i1s = one;
    DoubleDouble s0{0.0};
    DoubleDouble s1 = one - dd_euler_gamma * 2.0;  // psi(1) + psi(2)
    for (int k = 1; k < 100; ++k) {
        const double kd = k;
        t0 = t0 * y / DoubleDouble(kd * kd);
        t1 = t1 * y / DoubleDouble(kd * (kd + 1.0));
        harmonic += one / DoubleDouble(kd);
        i0 += t0;
        i1s += t1;
        s0 += t0 * harmonic;
        s1 += t1 * (harmonic * 2.0 - dd_euler_gamma * 2.0 + one / DoubleDouble(kd + 1.0));
        if (t0.hi() < 1e-34 * i0.hi() && t1.hi() < 1e-34 * i1s.hi()) break;
    }
    const DoubleDouble k0 = s0 - (log_half + dd_euler_gamma) * i0;
    const DoubleDouble k1 = one / DoubleDouble(x) + log_half * i1s * (0.5 * x) - s1 * (0.25 * x);
    if (!scaled) return {k0.to_double(), k1.to_double()};
    const DoubleDouble ex = dd_exp(DoubleDouble(x));
    return {(k0 * ex).to_double(), (k1 * ex).to_double()};
}

// Scaled K_0, K_1 for x > 2 from e^x K_nu(x) = int_0^inf exp(-x(cosh t - 1)) cosh(nu t) dt
// by the trapezoidal rule, which converges geometrically for this entire integrand.
K01 k01_integral_scaled(double x)
{
    const double h = std::min(0.2, 0.5 / std::sqrt(x));
    double s0 = 0.5;
    double s1 = 0.5;
    for (int j = 1; j < 100000; ++j) {
        const double t = j * h;
        const double w = std::exp(-x * (std::cosh(t) - 1.0));
        const double c1 = std::cosh(t);
        s0 += w;
        s1 += w * c1;
        if (w * c1 < 1e-19 * s1 && t > 1.0) break;
    }
    return {s0 * h, s1 * h};
}

K01 k01(double x, bool scaled)
{
    if (x <= 2.0) return k01_series(x, scaled);
    const K01 s = k01_integral_scaled(x);
    if (scaled) return s;
    const double ex = std::exp(-x);
    return {s.k0 * ex, s.k1 * ex};
}

struct KChain {
    double prev;  // scaled K_{n-1} (K_1 for n = 0)
    double value; // scaled K_n
};

KChain k_chain(int n, double x, bool scaled)
{
    const K01 base = k01(x, scaled);
    if (n == 0) return {base.k1, base.k0};
    double km1 = base.k0;
    double k = base.k1;
    for (int j = 1; j < n; ++j) {
        const double kp1 = km1 + (2.0 * j / x) * k;
        km1 = k;
        k = kp1;
        if (!std::isfinite(k) || k > DBL_MAX / 4) {
            throw OverflowError("bessel_k: K_" + std::to_string(n) + " overflows at this argument");
        }
    }
    return {km1, k};
}

} // namespace

double bessel_j(int n, double x)
{
    check_order(n, "bessel_j");
    check_j_argument(x, "bessel_j");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (use_series(n, x)) return j_series(n, x);
    return j_miller(n, x).value.to_double();
}

JPair bessel_j_pair(int n, double x)
{
    check_order(n, "bessel_j_pair");
    check_j_argument(x, "bessel_j_pair");
    if (x == 0.0) {
        if (n == 0) return {0.0, 1.0, 0.0};
        if (n == 1) return {1.0, 0.0, 0.5};
        throw DomainError("bessel_j_pair: x = 0 with n >= 2");
    }
    if (use_series(n, x)) {
        const double value = j_series(n, x);
        if (n == 0) {
            const double j1 = j_series(1, x);
            return {-j1, value, -j1};
        }
        const double prev = j_series(n - 1, x);
        return {prev, value, prev - (n / x) * value};
    }
    const MillerOut m = j_miller(n, x);
    const DoubleDouble prime = n == 0 ? -m.next : m.prev - DoubleDouble(static_cast<double>(n)) / x * m.value;
    return {m.prev.to_double(), m.value.to_double(), prime.to_double()};
}

double bessel_j_prime(int n, double x)
{
    check_order(n, "bessel_j_prime");
    check_j_argument(x, "bessel_j_prime");
    if (x == 0.0 && n >= 1) {
        throw DomainError("bessel_j_prime: x = 0 with n >= 1 (division by x)");
    }
    if (n == 0) return -bessel_j(1, x);
    return bessel_j_pair(n, x).prime;
}

double bessel_k_scaled(int n, double x)
{
    check_order(n, "bessel_k_scaled");
    check_k_argument(x, "bessel_k_scaled");
    return k_chain(n, x, true).value;
}

KPair bessel_k_scaled_pair(int n, double x)
{
    check_order(n, "bessel_k_scaled_pair");
    check_k_argument(x, "bessel_k_scaled_pair");
    const KChain c = k_chain(n, x, true);
    const double prime = n == 0 ? -c.prev : -c.prev - (n / x) * c.value;
    return {c.value, prime};
}

double bessel_k(int n, double x)
{
    check_order(n, "bessel_k");
    check_k_argument(x, "bessel_k");
    if (x <= 2.0) return k_chain(n, x, false).value;
    const double scaled = k_chain(n, x, true).value;
    // log(DBL_MIN) ~ -708.4
    if (std::log(scaled) - x < std::log(DBL_MIN)) {
        throw UnderflowError("bessel_k: K_" + std::to_string(n) + "(" + std::to_string(x)
                             + ") underflows; use bessel_k_scaled");
    }
    return scaled * std::exp(-x);
}

double bessel_k_prime_scaled(int n, double x)
{
    return bessel_k_scaled_pair(n, x).prime;
}

double bessel_k_prime(int n, double x)
{
    check_order(n, "bessel_k_prime");
    check_k_argument(x, "bessel_k_prime");
    const bool scaled = x > 2.0;
    const KChain c = k_chain(n, x, scaled);
    const double prime = n == 0 ? -c.prev : -c.prev - (n / x) * c.value;
    if (!scaled) return prime;
    if (std::log(-prime) - x < std::log(DBL_MIN)) {
        throw UnderflowError("bessel_k_prime: result underflows; use bessel_k_prime_scaled");
    }
    return prime * std::exp(-x);
}

} // namespace cylqd::specfun
