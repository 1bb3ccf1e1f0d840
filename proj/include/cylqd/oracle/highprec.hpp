#pragma once

#include "cylqd/double_double.hpp"

#include <string>

namespace cylqd::oracle {

enum class BesselKind { J, K };

/// Reference value carried as a double-double together with the number of
/// significant decimal digits the multi-precision evaluation guarantees.
struct HighPrecValue {
    DoubleDouble value;
    double digits;
};

/// J_n or K_n from the ascending (logarithmic, for K) power series summed in
/// MPFR arithmetic. The working precision grows with the cancellation the
/// series suffers; if the result cannot reach 30 digits within the precision
/// cap a NumericalError is thrown rather than returning a degraded value.
HighPrecValue highprec_bessel(BesselKind kind, int n, double x);

/// k-th positive zero of J_m, located by sign scan and bisection on the
/// reference values (independent of the fast specfun kernels).
double bessel_j_zero(int m, int k);

/// k-th positive zero of J'_m (x > 0).
double bessel_j_prime_zero(int m, int k);

struct SpecfunCertification {
    int points;
    int failures;
    double worst_j;          ///< relative, or absolute where |J| <= 1e-10
    double worst_k;          ///< relative
    std::string worst_case;  ///< description of the largest scaled error
};

/// Compare specfun::bessel_j / bessel_k with highprec_bessel on a grid of
/// orders 0..25 and arguments in (1e-3, 200] clustered toward small x.
SpecfunCertification certify_specfun(int points = 10000, double tolerance = 1e-12);

} // namespace cylqd::oracle
