#pragma once

#include <Eigen/Dense>
#include <complex>

#include "polscat/errors.hpp"

namespace polscat {

using Complex = std::complex<double>;

/// Polarization basis tag. Circular means (mu, nu) = (sigma+, sigma-),
/// the canonical internal basis. Linear means (mu, nu) = (x, y).
enum class Basis { Circular, Linear };

/// Two complex field amplitudes (sqrt photon-flux units) at wavenumber k.
struct JonesVector {
    Complex mu{0.0, 0.0};
    Complex nu{0.0, 0.0};
    double k = 1.0;
    Basis basis = Basis::Circular;

    JonesVector() = default;
    JonesVector(Complex mu_, Complex nu_, double k_, Basis basis_ = Basis::Circular);

    Eigen::Vector2cd vec() const { return {mu, nu}; }
    double norm2() const { return std::norm(mu) + std::norm(nu); }

    /// Rebuild with the same k/basis but new components.
    JonesVector with(const Eigen::Vector2cd& v) const { return {v(0), v(1), k, basis}; }
};

/// Fixed unitary mapping linear (x, y) components into circular (sigma+, sigma-):
///   E+ = (Ex - i Ey) / sqrt(2)
///   E- = -(Ex + i Ey) / sqrt(2)
Eigen::Matrix2cd linear_to_circular_matrix();

JonesVector to_circular(const JonesVector& v);
JonesVector to_linear(const JonesVector& v);

/// Throws InvalidInputError unless a and b share wavenumber and basis.
void require_compatible(const JonesVector& a, const JonesVector& b);

/// 2x2 block matrix of 2x2 complex blocks relating the mode pair on the left
/// side of a scatterer to the pair on its right:
///   (A, B)_left = M (C, D)_right
/// with A leftward-propagating on the left, B rightward on the left,
/// C leftward on the right and D rightward on the right.
struct TransferTensor {
    Eigen::Matrix2cd m11, m12, m21, m22;

    static TransferTensor identity();
    Eigen::Matrix4cd as_matrix() const;
    static TransferTensor from_matrix(const Eigen::Matrix4cd& m);
};

/// Four field modes around one scatterer. b_in and c_in illuminate it,
/// a_out and d_out leave it.
struct ModeQuartet {
    JonesVector a_out;  // left side, leftward
    JonesVector b_in;   // left side, rightward
    JonesVector c_in;   // right side, leftward
    JonesVector d_out;  // right side, rightward
};

/// Transfer tensor of a thin polarizable scatterer:
///   M = [[1 + i zeta,  i zeta], [-i zeta, 1 - i zeta]]
/// so that the outgoing modes are the incoming ones plus a scattered wave
/// +i zeta E_local radiated symmetrically to both sides. Per polarization this
/// gives t = 1/(1 - i zeta) and r = i zeta/(1 - i zeta).
TransferTensor transfer_tensor(const Eigen::Matrix2cd& zeta);

/// Block-matrix product. The result maps the right-side pair of `right`
/// to the left-side pair of `left`.
TransferTensor compose(const TransferTensor& left, const TransferTensor& right);

/// Solve (A,B) = M (C,D) for the outgoing modes given B = b_in, C = c_in.
ModeQuartet scatter(const TransferTensor& t, const JonesVector& b_in, const JonesVector& c_in);

}  // namespace polscat
