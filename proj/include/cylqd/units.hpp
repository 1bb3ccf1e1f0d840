#pragma once

#include <cstdint>
#include <string_view>

namespace cylqd {

/// Conversion factors between laboratory units and Hartree atomic units.
///
/// Energies are in hartree, lengths in bohr. The magnetic field is carried in
/// the Gaussian atomic unit e/a0^2 so that the diamagnetic operator reads
/// A^2/(2c^2) with c = 1/alpha; that unit is au_field_in_tesla / c_au tesla.
struct PhysicalConstants {
    double hartree_in_ev;     ///< eV per hartree
    double bohr_in_nm;        ///< nm per bohr
    double au_field_in_tesla; ///< tesla per SI atomic field unit hbar/(e a0^2)
    double kOe_in_tesla;      ///< exactly 0.1
    double c_au;              ///< speed of light in atomic units (1/alpha)

    /// Tesla per Gaussian atomic field unit e/a0^2.
    [[nodiscard]] double gaussian_field_in_tesla() const { return au_field_in_tesla / c_au; }

    /// FNV-1a hash over the bit patterns of the table, for output metadata.
    [[nodiscard]] std::uint64_t fingerprint() const;
};

/// CODATA 2018 values. The single source for every conversion and for c.
const PhysicalConstants& codata2018();

enum class Unit { nm, eV, meV, kOe };

struct Quantity {
    double value;
    Unit unit;
};

/// Scale to atomic units (bohr, hartree, or Gaussian atomic field).
double to_atomic_units(Quantity q, const PhysicalConstants& c = codata2018());

/// String-tagged variant for configuration input; unknown tags throw ConfigError.
double to_atomic_units(double value, std::string_view unit_tag,
                       const PhysicalConstants& c = codata2018());

double energy_to_mev(double hartree, const PhysicalConstants& c = codata2018());
double length_to_nm(double bohr, const PhysicalConstants& c = codata2018());
double field_to_kOe(double field_au, const PhysicalConstants& c = codata2018());

/// Round-trip and CODATA identity checks on a (possibly tampered) table.
struct ConstantsCheck {
    bool ok;
    double worst_roundtrip;  ///< max relative round-trip error over probes
    double worst_identity;   ///< max relative deviation from CODATA identities
};

ConstantsCheck check_constants(const PhysicalConstants& c);

} // namespace cylqd
