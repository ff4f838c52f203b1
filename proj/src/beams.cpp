#include "polscat/beams.hpp"

#include <cmath>
#include <numbers>

namespace polscat {

BeamPair lin_perp_lin_beams(double b_amplitude, double k, double x) {
    const double a = b_amplitude / std::sqrt(2.0);
    const Complex pb = std::exp(Complex(0.0, k * x - std::numbers::pi / 4.0));
    const Complex pc = std::exp(Complex(0.0, -k * x + std::numbers::pi / 4.0));
    JonesVector b{a * pb, a * pb, k, Basis::Circular};
    JonesVector c{Complex(0.0, a) * pc, Complex(0.0, -a) * pc, k, Basis::Circular};
    return {b, c};
}

BeamPair sigma_beams(double b_amplitude, double k, double x) {
    const Complex pb = std::exp(Complex(0.0, k * x));
    const Complex pc = std::exp(Complex(0.0, -k * x));
    JonesVector b{b_amplitude * pb, 0.0, k, Basis::Circular};
    JonesVector c{0.0, b_amplitude * pc, k, Basis::Circular};
    return {b, c};
}

LocalField local_field(const JonesVector& b, const JonesVector& c, double x) {
    require_compatible(b, c);
    if (b.basis != Basis::Circular)
        throw InvalidInputError("local_field: beams must be in the circular basis");
    return {b.mu + c.mu, b.nu + c.nu, b.k, x};
}

}  // namespace polscat
