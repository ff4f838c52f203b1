#pragma once

#include "polscat/atom.hpp"
#include "polscat/jones.hpp"

namespace polscat {

/// Force on the atom in units of hbar k times photon flux (hbar = c = 1).
struct ForceResult {
    double total = 0.0;
    double position_term = 0.0;
    double friction_term = 0.0;  // the part proportional to v
};

/// First-order-in-v/c expansion of the radiation force, both the truncated
/// form used downstream and the intermediate one keeping the Doppler cross
/// term between counterpropagating modes.
struct ForceExpansion {
    ForceResult approx;       // position_term + friction_term
    double cross_term = 0.0;  // 4 (v/c) hbar k Im{(zeta B).C* + (zeta C).B*}
    double exact_total = 0.0; // position_term + cross_term + friction_term
};

/// Net momentum flux into the scatterer:
///   F = hbar k (|A|^2 + |B|^2 - |C|^2 - |D|^2).
double force_from_modes(const ModeQuartet& q);

/// Lowest-order force on a moving scatterer:
///   position  =  2 hbar k   Im{[zeta (B+C)] . (B-C)*}
///   friction  = -2 (v/c) hbar k^2 Im{[dzeta/dk (B+C)] . (B+C)*}
/// plus the cross term dropped when ||k dzeta/dk|| >> ||zeta||. Dot products
/// are bilinear; the conjugation is written explicitly.
ForceExpansion force_expansion(const PolarizabilityTensor& zeta, const JonesVector& b_in,
                               const JonesVector& c_in, double v);

/// Closed-form force for a j=1/2 -> 3/2 atom in counterpropagating,
/// orthogonally linearly polarized beams of amplitude B, with residence-time
/// lag tau_p:
///   F = -(2/3) hbar k |B|^2 zeta0 sin(4kx) - (8/3) hbar k^2 |B|^2 zeta0 v tau_p sin^2(2kx)
ForceResult sisyphus_force(double x, double v, double zeta0, double b_amplitude, double k,
                           double tau_p);

/// Closed-form force for a j=1 -> 2 atom in counterpropagating sigma+/sigma-
/// beams of amplitude B, evaluated from the populations and the m=-1/+1
/// coherence C of rho.
ForceResult sigma_force(double x, double v, const LevelScheme& scheme,
                        const GroundDensityMatrix& rho, double b_amplitude, double k);

}  // namespace polscat
