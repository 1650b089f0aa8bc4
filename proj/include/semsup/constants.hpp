#pragma once

namespace semsup::consts {

// CODATA 2018
inline constexpr double hbar    = 1.054571817e-34;   // J s
inline constexpr double h       = 6.62607015e-34;    // J s
inline constexpr double eps0    = 8.8541878128e-12;  // F/m
inline constexpr double c_light = 2.99792458e8;      // m/s
inline constexpr double eV      = 1.602176634e-19;   // J

} // namespace semsup::consts
