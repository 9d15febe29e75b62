#pragma once

namespace farey {

// pi^2 split into a double head and a double tail; the pair carries about
// 32 significant digits.
inline constexpr double kPiSquaredHi = 9.869604401089358;
inline constexpr double kPiSquaredLo = 6.265295508739711e-16;

inline constexpr long double kPiSquared =
    static_cast<long double>(kPiSquaredHi) + static_cast<long double>(kPiSquaredLo);

// 3/pi^2, the density of F_N: |F_N| ~ (3/pi^2) N^2.
inline constexpr long double kFareyDensity = 3.0L / kPiSquared;

}  // namespace farey
