#pragma once

#include <utility>

#include "polscat/bloch.hpp"
#include "polscat/jones.hpp"

namespace polscat {

struct BeamPair {
    JonesVector b;  // rightward-propagating input
    JonesVector c;  // leftward-propagating input
};

/// Counterpropagating beams of equal intensity and orthogonal linear
/// polarization, written in the circular basis at the atom position x:
///   B = (B0/sqrt 2) (1, 1)  exp(i k x - i pi/4)
///   C = (i B0/sqrt 2) (1, -1) exp(-i k x + i pi/4)
BeamPair lin_perp_lin_beams(double b_amplitude, double k, double x);

/// Counterpropagating sigma+ / sigma- beams of equal intensity:
///   B = B0 (1, 0) exp(i k x),  C = B0 (0, 1) exp(-i k x)
BeamPair sigma_beams(double b_amplitude, double k, double x);

/// Total illumination at the atom: componentwise sum of the incoming modes.
LocalField local_field(const JonesVector& b, const JonesVector& c, double x);

}  // namespace polscat
