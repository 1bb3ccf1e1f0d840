#include "cylqd/app.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/oracle/highprec.hpp"
#include "cylqd/specfun.hpp"
#include "detail.hpp"

#include <cmath>

namespace cylqd::app {

using detail::strf;

SpecfunKind parse_specfun_kind(std::string_view tag)
{
    if (tag == "J" || tag == "j") return SpecfunKind::J;
    if (tag == "K" || tag == "k") return SpecfunKind::K;
    throw ConfigError("unknown function kind '" + std::string(tag) + "' (expected J or K)");
}

CommandResult cmd_specfun(SpecfunKind kind, int n, double x, bool check)
{
    const double v = kind == SpecfunKind::J ? specfun::bessel_j(n, x) : specfun::bessel_k(n, x);
    CommandResult out{exit_ok, {}, strf("%#.17g\n", v)};
    if (check) {
        const auto ref = oracle::highprec_bessel(
            kind == SpecfunKind::J ? oracle::BesselKind::J : oracle::BesselKind::K, n, x);
        const double r = ref.value.to_double();
        const double delta = r != 0.0 ? std::abs(v - r) / std::abs(r) : std::abs(v - r);
        out.summary += strf("oracle %#.17g (%.0f digits)\n", r, ref.digits);
        out.summary += strf("delta %.3e %s\n", delta, r != 0.0 ? "relative" : "absolute");
    }
    return out;
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) return exit_config;
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return exit_config;
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) return exit_config;
    return exit_numerical;
}

} // namespace cylqd::app
