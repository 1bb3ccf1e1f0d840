#include "cylqd/units.hpp"

#include "cylqd/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace cylqd {

std::uint64_t PhysicalConstants::fingerprint() const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (double v : {hartree_in_ev, bohr_in_nm, au_field_in_tesla, kOe_in_tesla, c_au}) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

const PhysicalConstants& codata2018()
{
    static const PhysicalConstants table{
        27.211386245988,   // Hartree energy in eV, CODATA 2018
        0.0529177210903,   // Bohr radius in nm, CODATA 2018
        2.35051756758e5,   // atomic unit of magnetic flux density in T, CODATA 2018
        0.1,               // 1 kOe = 0.1 T (exact, Gaussian/SI)
        137.035999084,     // inverse fine-structure constant, CODATA 2018
    };
    return table;
}

double to_atomic_units(Quantity q, const PhysicalConstants& c)
{
    if (!std::isfinite(q.value)) {
        throw DomainError("to_atomic_units: value must be finite");
    }
    switch (q.unit) {
    case Unit::nm:
        return q.value / c.bohr_in_nm;
    case Unit::eV:
        return q.value / c.hartree_in_ev;
    case Unit::meV:
        return q.value / (1000.0 * c.hartree_in_ev);
    case Unit::kOe:
        return q.value * c.kOe_in_tesla / c.gaussian_field_in_tesla();
    }
    throw ConfigError("to_atomic_units: unsupported unit");
}

double to_atomic_units(double value, std::string_view unit_tag, const PhysicalConstants& c)
{
    if (unit_tag == "nm") return to_atomic_units({value, Unit::nm}, c);
    if (unit_tag == "eV") return to_atomic_units({value, Unit::eV}, c);
    if (unit_tag == "meV") return to_atomic_units({value, Unit::meV}, c);
    if (unit_tag == "kOe") return to_atomic_units({value, Unit::kOe}, c);
    throw ConfigError("unsupported unit tag '" + std::string(unit_tag) + "'");
}

double energy_to_mev(double hartree, const PhysicalConstants& c)
{
    return hartree * c.hartree_in_ev * 1000.0;
}

double length_to_nm(double bohr, const PhysicalConstants& c)
{
    return bohr * c.bohr_in_nm;
}

double field_to_kOe(double field_au, const PhysicalConstants& c)
{
    return field_au * c.gaussian_field_in_tesla() / c.kOe_in_tesla;
}

namespace {

double rel_dev(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b)) return INFINITY;
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

ConstantsCheck check_constants(const PhysicalConstants& c)
{
    ConstantsCheck out{true, 0.0, 0.0};

    const std::array<double, 5> probes{1e-3, 0.37, 1.0, 57.0, 4.2e4};
    for (double x : probes) {
        out.worst_roundtrip = std::max(out.worst_roundtrip,
                                       rel_dev(length_to_nm(to_atomic_units({x, Unit::nm}, c), c), x));
        out.worst_roundtrip = std::max(
            out.worst_roundtrip,
            rel_dev(energy_to_mev(to_atomic_units({x, Unit::meV}, c), c), x));
        out.worst_roundtrip = std::max(out.worst_roundtrip,
                                       rel_dev(field_to_kOe(to_atomic_units({x, Unit::kOe}, c), c), x));
    }

    // Exact SI 2019 definitions plus CODATA 2018 m_e c^2 and hbar*c.
    constexpr double hbar = 1.054571817e-34;  // J s
    constexpr double e_charge = 1.602176634e-19;  // C
    constexpr double me_c2_ev = 0.51099895000e6;  // eV
    constexpr double hbar_c_ev_nm = 197.3269804;  // eV nm
    const double alpha = 1.0 / c.c_au;
    const double a0_m = c.bohr_in_nm * 1e-9;

    out.worst_identity = std::max({
        rel_dev(c.hartree_in_ev, alpha * alpha * me_c2_ev),
        rel_dev(c.bohr_in_nm, hbar_c_ev_nm / (me_c2_ev * alpha)),
        rel_dev(c.au_field_in_tesla, hbar / (e_charge * a0_m * a0_m)),
        rel_dev(c.kOe_in_tesla, 0.1),
    });

    const bool positive = c.hartree_in_ev > 0 && c.bohr_in_nm > 0 && c.au_field_in_tesla > 0
                          && c.kOe_in_tesla > 0 && c.c_au > 0;
    out.ok = positive && out.worst_roundtrip <= 1e-14 && out.worst_identity <= 1e-9;
    return out;
}

} // namespace cylqd
