#include "cylqd/oracle/highprec.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/specfun.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <functional>
#include <string>

namespace cylqd::oracle {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

namespace {

constexpr double target_digits = 30.0;
constexpr long precision_cap_bits = 120000;
constexpr double log2_10 = 3.3219280948873623;

class PrecisionScope {
public:
    explicit PrecisionScope(long bits) : saved_(Real::default_precision())
    {
        Real::default_precision(static_cast<unsigned>(std::ceil(bits / log2_10)) + 2);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct SeriesResult {
    Real value;
    Real magnitude; // sum of absolute values of all contributions
};

double log2_abs(const Real& v)
{
    if (v == 0) return -1e9;
    long exp = 0;
    double mant = mpfr_get_d_2exp(&exp, v.backend().data(), MPFR_RNDN);
    return std::log2(std::abs(mant)) + static_cast<double>(exp);
}

SeriesResult j_series(int n, const Real& x)
{
    const Real y = x * x / 4;
    Real lead = 1;
    for (int j = 1; j <= n; ++j) {
        lead *= x / (2 * j);
    }
    Real term = lead;
    Real sum = lead;
    Real mag = abs(lead);
    const Real eps = pow(Real(2), -static_cast<long>(Real::default_precision() * log2_10) - 8);
    for (long k = 1;; ++k) {
        term *= -y / (k * static_cast<double>(n + k));
        sum += term;
        mag += abs(term);
        if (k * static_cast<double>(n + k) > y && abs(term) < eps * mag) break;
    }
    return {sum, mag};
}

SeriesResult k_series(int n, const Real& x)
{
    const Real y = x * x / 4;
    const Real half_x = x / 2;
    Real gamma;
    mpfr_const_euler(gamma.backend().data(), MPFR_RNDN);
    const Real eps = pow(Real(2), -static_cast<long>(Real::default_precision() * log2_10) - 8);

    // 1/2 (x/2)^-n sum_{k<n} (n-k-1)!/k! (-y)^k
    Real finite = 0;
    Real finite_mag = 0;
    if (n > 0) {
        Real t = 1;
        for (int j = 1; j <= n - 1; ++j) t *= j; // (n-1)!
        for (int k = 0; k < n; ++k) {
            finite += t;
            finite_mag += abs(t);
            if (k + 1 < n) t *= -y / ((k + 1) * static_cast<double>(n - k - 1));
        }
        const Real scale = pow(half_x, -n) / 2;
        finite *= scale;
        finite_mag *= scale;
    }

    // I_n(x) and the digamma-weighted series, both with y^k / (k! (n+k)!)
    Real base = 1;
    for (int j = 1; j <= n; ++j) base /= j;
    Real t = base;
    Real i_sum = 0;
    Real psi_sum = 0;
    Real psi_mag = 0;
    Real psi_a = -gamma; // psi(k+1)
    Real psi_b = -gamma; // psi(n+k+1)
    for (int j = 1; j <= n; ++j) psi_b += Real(1) / j;
    for (long k = 0;; ++k) {
        i_sum += t;
        const Real w = t * (psi_a + psi_b);
        psi_sum += w;
        psi_mag += abs(w);
        if (k * static_cast<double>(n + k) > y && t < eps * i_sum && abs(w) < eps * psi_mag) break;
        t *= y / ((k + 1) * static_cast<double>(n + k + 1));
        psi_a += Real(1) / (k + 1);
        psi_b += Real(1) / (n + k + 1);
    }
    const Real pow_half = pow(half_x, n);
    const Real i_n = pow_half * i_sum;
    const Real log_term = log(half_x) * i_n;
    const Real psi_term = pow_half * psi_sum / 2;
    const int sign_log = (n % 2 == 0) ? -1 : 1; // (-1)^{n+1}
    const int sign_psi = (n % 2 == 0) ? 1 : -1;

    Real value = finite + sign_log * log_term + sign_psi * psi_term;
    Real mag = finite_mag + abs(log_term) + pow_half * psi_mag / 2;
    return {value, mag};
}

HighPrecValue evaluate(BesselKind kind, int n, double x)
{
    const double growth_bits = (kind == BesselKind::J ? 1.0 : 2.0) * x * 1.4426950408889634;
    long bits = 160 + static_cast<long>(growth_bits);
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (bits > precision_cap_bits) break;
        PrecisionScope scope(bits);
        const Real xr = x;
        const SeriesResult r = kind == BesselKind::J ? j_series(n, xr) : k_series(n, xr);
        const double loss = log2_abs(r.magnitude) - log2_abs(r.value);
        const double digits = (static_cast<double>(bits) - loss - 16.0) / log2_10;
        if (r.value == 0 || digits >= target_digits + 4.0) {
            const double hi = r.value.convert_to<double>();
            const double lo = Real(r.value - hi).convert_to<double>();
            return {DoubleDouble(hi, lo), std::min(digits, 32.0)};
        }
        bits += static_cast<long>(loss) + 64;
    }
    throw NumericalError("highprec_bessel: precision budget exhausted for order " + std::to_string(n)
                         + " at x = " + std::to_string(x));
}

double bisect_sign_change(const std::function<double(double)>& f, double a, double b)
{
    double fa = f(a);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (fa < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

double kth_sign_change(const std::function<double(double)>& f, double start, int k)
{
    if (k < 1) throw DomainError("zero index must be >= 1");
    const double step = 0.125;
    double a = start;
    double fa = f(a);
    int found = 0;
    while (a < specfun::max_argument) {
        const double b = a + step;
        const double fb = f(b);
        if ((fa < 0) != (fb < 0) || fb == 0.0) {
            if (++found == k) return bisect_sign_change(f, a, b);
        }
        a = b;
        fa = fb;
    }
    throw NumericalError("bessel zero search ran past the argument domain");
}

void check_domain(BesselKind kind, int n, double x)
{
    if (n < 0 || n > specfun::max_order) throw DomainError("highprec_bessel: order outside [0, 60]");
    if (!(x <= specfun::max_argument) || x < 0.0 || (kind == BesselKind::K && x == 0.0)) {
        throw DomainError("highprec_bessel: argument outside domain");
    }
}

} // namespace

HighPrecValue highprec_bessel(BesselKind kind, int n, double x)
{
    check_domain(kind, n, x);
    if (kind == BesselKind::J && x == 0.0) return {DoubleDouble(n == 0 ? 1.0 : 0.0), 32.0};
    return evaluate(kind, n, x);
}

double bessel_j_zero(int m, int k)
{
    auto f = [m](double x) { return highprec_bessel(BesselKind::J, m, x).value.to_double(); };
    return kth_sign_change(f, std::max(1e-3, m - 1.0), k);
}

double bessel_j_prime_zero(int m, int k)
{
    auto f = [m](double x) {
        if (m == 0) return -highprec_bessel(BesselKind::J, 1, x).value.to_double();
        const DoubleDouble prev = highprec_bessel(BesselKind::J, m - 1, x).value;
        const DoubleDouble cur = highprec_bessel(BesselKind::J, m, x).value;
        return (prev - DoubleDouble(static_cast<double>(m)) / DoubleDouble(x) * cur).to_double();
    };
    return kth_sign_change(f, std::max(1e-3, m - 1.0), k);
}

} // namespace cylqd::oracle
