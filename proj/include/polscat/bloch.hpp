#pragma once

#include <Eigen/Dense>
#include <functional>

#include "polscat/atom.hpp"

namespace polscat {

/// sigma+/sigma- field amplitudes at the atom's position.
struct LocalField {
    Complex e_plus{0.0, 0.0};
    Complex e_minus{0.0, 0.0};
    double k = 1.0;
    double x = 0.0;

    double intensity() const { return std::norm(e_plus) + std::norm(e_minus); }
};

/// Residence time and atom velocity for the non-adiabatic correction.
struct PumpingParameters {
    double tau_p = 1.0;
    double v = 0.0;
};

using FieldProfile = std::function<LocalField(double x)>;

/// Low-saturation ground-manifold optical-pumping generator:
///   L(rho) = -1/2 {W'W, rho} + sum_q (A_q W) rho (A_q W)'
/// with W = sum_q E_q A_q' the excitation operator and A_q the CG-weighted
/// lowering operator of polarization q. Absorption rates go as |CG E_q|^2,
/// spontaneous decay branches with squared CG coefficients, and the
/// off-diagonal parts of W'W couple ground coherences (stimulated Raman).
/// The field is normalized to unit intensity, so the stationary state is
/// manifestly independent of the overall field amplitude.
class GroundLevelGenerator {
public:
    GroundLevelGenerator(const LevelScheme& scheme, const LocalField& field);

    /// Apply L to a ground-manifold operator.
    Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;

    /// The vectorized n^2 x n^2 superoperator (column-major stacking).
    const Eigen::MatrixXcd& matrix() const { return superop_; }

    /// Unique unit-trace stationary state. Throws DarkStateError when the
    /// stationary manifold has dimension > 1.
    GroundDensityMatrix steady_state() const;

    const Eigen::MatrixXcd& absorption_operator() const { return g_; }

private:
    int n_;
    Eigen::MatrixXcd g_;                     // W'W
    std::vector<Eigen::MatrixXcd> jumps_;    // A_q W for q = -1, 0, +1
    Eigen::MatrixXcd superop_;
};

/// Stationary ground density matrix under the given local field.
GroundDensityMatrix steady_state(const LevelScheme& scheme, const LocalField& field);

/// rho(x) - v tau_p d(rho)/dx, the first-order lag of a moving atom behind
/// the local steady state. The spatial derivative is taken by central
/// differences with step h = 1e-6/k.
GroundDensityMatrix nonadiabatic_populations(const LevelScheme& scheme,
                                             const FieldProfile& profile,
                                             const PumpingParameters& params, double x);

}  // namespace polscat
