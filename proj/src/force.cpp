#include "polscat/force.hpp"

#include <cmath>

namespace polscat {

using Eigen::Vector2cd;

namespace {

// Bilinear dot with explicit conjugation of the second factor: u . w*.
Complex dot_conj(const Vector2cd& u, const Vector2cd& w) {
    return u(0) * std::conj(w(0)) + u(1) * std::conj(w(1));
}

}  // namespace

double force_from_modes(const ModeQuartet& q) {
    if (q.a_out.k != q.b_in.k || q.b_in.k != q.c_in.k || q.c_in.k != q.d_out.k)
        throw InvalidInputError("force_from_modes: modes carry different wavenumbers");
    if (q.a_out.basis != q.b_in.basis || q.b_in.basis != q.c_in.basis ||
        q.c_in.basis != q.d_out.basis)
        throw InvalidInputError("force_from_modes: modes carry different bases");

    return q.b_in.k * (q.a_out.norm2() + q.b_in.norm2() - q.c_in.norm2() - q.d_out.norm2());
}

ForceExpansion force_expansion(const PolarizabilityTensor& zeta, const JonesVector& b_in,
                               const JonesVector& c_in, double v) {
    require_compatible(b_in, c_in);
    const double k = b_in.k;

    const Vector2cd b = b_in.vec();
    const Vector2cd c = c_in.vec();
    const Vector2cd sum = b + c;
    const Vector2cd diff = b - c;

    ForceExpansion out;
    out.approx.position_term = 2.0 * k * std::imag(dot_conj(zeta.zeta * sum, diff));
    out.approx.friction_term = -2.0 * v * k * k * std::imag(dot_conj(zeta.dzeta_dk * sum, sum));
    out.approx.total = out.approx.position_term + out.approx.friction_term;
    out.cross_term =
        4.0 * v * k * std::imag(dot_conj(zeta.zeta * b, c) + dot_conj(zeta.zeta * c, b));
    out.exact_total = out.approx.position_term + out.cross_term + out.approx.friction_term;
    return out;
}

ForceResult sisyphus_force(double x, double v, double zeta0, double b_amplitude, double k,
                           double tau_p) {
    const double b2 = b_amplitude * b_amplitude;
    const double s2 = std::sin(2.0 * k * x);
    ForceResult f;
    f.position_term = -(2.0 / 3.0) * k * b2 * zeta0 * std::sin(4.0 * k * x);
    f.friction_term = -(8.0 / 3.0) * k * k * b2 * zeta0 * v * tau_p * s2 * s2;
    f.total = f.position_term + f.friction_term;
    return f;
}

ForceResult sigma_force(double x, double v, const LevelScheme& scheme,
                        const GroundDensityMatrix& rho, double b_amplitude, double k) {
    if (scheme.j_ground() != 1.0 || scheme.j_excited() != 2.0)
        throw InvalidInputError("sigma_force: requires the j=1 -> 2 scheme");
    if (rho.size() != 3)
        throw InvalidInputError("sigma_force: density matrix must be 3x3");

    const double b2 = b_amplitude * b_amplitude;
    const double pi_plus = rho.population(+1.0);
    const double pi_minus = rho.population(-1.0);
    const double pi_zero = rho.population(0.0);
    const Complex w = rho.coherence(+1.0, -1.0) * std::exp(Complex(0.0, -2.0 * k * x));

    const Complex i(0.0, 1.0);
    ForceResult f;
    f.position_term =
        2.0 * k * b2 *
        std::imag(scheme.zeta0() * ((5.0 / 6.0) * (pi_plus - pi_minus) +
                                    (1.0 / 6.0) * i * std::imag(w)));
    f.friction_term = -2.0 * v * k * k * b2 * std::imag(scheme.dzeta0_dk()) *
                      ((7.0 / 6.0) * (pi_plus + pi_minus) + pi_zero + (1.0 / 3.0) * std::real(w));
    f.total = f.position_term + f.friction_term;
    return f;
}

}  // namespace polscat
