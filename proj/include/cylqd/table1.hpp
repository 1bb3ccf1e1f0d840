#pragma once

#include <array>

namespace cylqd::table1 {

/// Published reference spectrum for R = 2.75 nm, l = 4 nm, V0 = 1 eV,
/// H = 100 kOe, in meV, rounded to integers by the source. Values are copied
/// verbatim; rows are the ten lowest levels n = 1..10 of each m.
struct Cell {
    int e;  ///< unperturbed
    int e1; ///< circular-gauge corrected
    int e2; ///< elliptic-gauge corrected
};

inline constexpr int rows = 10;
inline constexpr int m_count = 3;

// clang-format off
inline constexpr std::array<std::array<Cell, m_count>, rows> reference = {{
    // n     m = 0            m = 1            m = 2
    /* 1 */ {{{ 57,  59,  60}, {109, 111, 112}, {178, 180, 181}}},
    /* 2 */ {{{128, 130, 129}, {180, 182, 182}, {249, 251, 251}}},
    /* 3 */ {{{202, 204, 205}, {297, 300, 299}, {366, 369, 368}}},
    /* 4 */ {{{245, 247, 247}, {313, 315, 316}, {442, 444, 445}}},
    /* 5 */ {{{273, 275, 275}, {384, 386, 386}, {513, 515, 515}}},
    /* 6 */ {{{390, 393, 392}, {462, 464, 464}, {531, 533, 533}}},
    /* 7 */ {{{410, 412, 411}, {501, 504, 503}, {630, 633, 632}}},
    /* 8 */ {{{467, 469, 470}, {658, 660, 661}, {717, 719, 720}}},
    /* 9 */ {{{537, 540, 539}, {666, 668, 668}, {742, 745, 744}}},
    /*10 */ {{{555, 557, 557}, {673, 676, 675}, {788, 790, 790}}},
}};
// clang-format on

inline constexpr double radius_nm = 2.75;
inline constexpr double height_nm = 4.0;
inline constexpr double barrier_ev = 1.0;
inline constexpr double field_kOe = 100.0;

} // namespace cylqd::table1
