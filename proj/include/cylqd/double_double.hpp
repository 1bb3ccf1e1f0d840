#pragma once

#include <cmath>

namespace cylqd {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 106 significant bits.
/// Error-free transformations follow Dekker/Knuth; products use fma.
class DoubleDouble {
public:
    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double x) : hi_(x) {} // NOLINT: implicit widening is intended
    constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

    [[nodiscard]] constexpr double hi() const { return hi_; }
    [[nodiscard]] constexpr double lo() const { return lo_; }
    [[nodiscard]] constexpr double to_double() const { return hi_ + lo_; }

    friend DoubleDouble operator-(DoubleDouble a) { return {-a.hi_, -a.lo_}; }

    friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b)
    {
        auto [s, e] = two_sum(a.hi_, b.hi_);
        auto [t, f] = two_sum(a.lo_, b.lo_);
        e += t;
        auto [s2, e2] = quick_two_sum(s, e);
        e2 += f;
        return from_quick(s2, e2);
    }

    friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

    friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b)
    {
        double p = a.hi_ * b.hi_;
        double e = std::fma(a.hi_, b.hi_, -p);
        e += a.hi_ * b.lo_ + a.lo_ * b.hi_;
        return from_quick(p, e);
    }

    friend DoubleDouble operator*(DoubleDouble a, double b)
    {
        double p = a.hi_ * b;
        double e = std::fma(a.hi_, b, -p);
        e += a.lo_ * b;
        return from_quick(p, e);
    }

    friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b)
    {
        // Two Newton corrections on the double quotient.
        double q1 = a.hi_ / b.hi_;
        DoubleDouble r = a - b * q1;
        double q2 = r.hi_ / b.hi_;
        r = r - b * q2;
        double q3 = r.hi_ / b.hi_;
        return DoubleDouble(q1) + DoubleDouble(q2) + DoubleDouble(q3);
    }

    DoubleDouble& operator+=(DoubleDouble b) { return *this = *this + b; }
    DoubleDouble& operator-=(DoubleDouble b) { return *this = *this - b; }
    DoubleDouble& operator*=(DoubleDouble b) { return *this = *this * b; }
    DoubleDouble& operator*=(double b) { return *this = *this * b; }
    DoubleDouble& operator/=(DoubleDouble b) { return *this = *this / b; }

    friend bool operator<(DoubleDouble a, DoubleDouble b)
    {
        return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
    }

    friend DoubleDouble abs(DoubleDouble a) { return a.hi_ < 0.0 ? -a : a; }

    /// Exact sum of two doubles as (sum, error).
    struct Pair {
        double s;
        double e;
    };

    static constexpr Pair two_sum(double a, double b)
    {
        double s = a + b;
        double bb = s - a;
        double e = (a - (s - bb)) + (b - bb);
        return {s, e};
    }

    static constexpr Pair quick_two_sum(double a, double b)
    {
        double s = a + b;
        return {s, b - (s - a)};
    }

private:
    static DoubleDouble from_quick(double a, double b)
    {
        auto [s, e] = quick_two_sum(a, b);
        return {s, e};
    }

    double hi_ = 0.0;
    double lo_ = 0.0;
};

inline constexpr DoubleDouble dd_pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DoubleDouble dd_ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DoubleDouble dd_euler_gamma{0.5772156649015329, -4.942915152430645e-18};

/// exp in double-double: reduce by ln2 and 2^-10, Taylor, square back.
inline DoubleDouble dd_exp(DoubleDouble a)
{
    const double k = std::nearbyint(a.hi() / dd_ln2.hi());
    DoubleDouble r = a - dd_ln2 * k;
    r *= 1.0 / 1024.0;
    // expm1(r) by Taylor; |r| < 4e-4 so 12 terms reach 1e-40.
    DoubleDouble term = r;
    DoubleDouble sum = r;
    for (int j = 2; j <= 12; ++j) {
        term = term * r / DoubleDouble(static_cast<double>(j));
        sum += term;
    }
    for (int i = 0; i < 10; ++i) {
        sum = sum * 2.0 + sum * sum;
    }
    sum += DoubleDouble(1.0);
    const int e = static_cast<int>(k);
    return {std::ldexp(sum.hi(), e), std::ldexp(sum.lo(), e)};
}

/// Natural log of a positive double in double-double (one Newton step on exp).
inline DoubleDouble dd_log(double x)
{
    const double l = std::log(x);
    return DoubleDouble(l) + (DoubleDouble(x) * dd_exp(DoubleDouble(-l)) - DoubleDouble(1.0));
}

} // namespace cylqd
