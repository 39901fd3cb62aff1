#pragma once

// Physical constants, CODATA 2018, SI units. Every unit conversion in the
// library goes through this header so there is a single source of truth.
namespace dephasing::constants {

inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double k_boltzmann = 1.380649e-23;       // J / K
inline constexpr double electron_volt = 1.602176634e-19;  // J

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double ev_to_joule(double ev) { return ev * electron_volt; }
inline constexpr double joule_to_ev(double j) { return j / electron_volt; }

inline constexpr double nm = 1e-9;  // m
inline constexpr double ps = 1e-12; // s

}  // namespace dephasing::constants
