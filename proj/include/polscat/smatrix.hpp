#pragma once

#include <Eigen/Dense>

#include "polscat/jones.hpp"

namespace polscat {

/// Scattering matrix of a subsystem: outgoing modes from incoming ones,
///   (a, d) = [[s11, s12], [s21, s22]] (b, c)
/// with b entering at the left reference plane, c at the right one.
/// Unlike the transfer tensor this stays finite for perfect reflectors.
struct SMatrix {
    Eigen::Matrix2cd s11 = Eigen::Matrix2cd::Zero();  // left reflection
    Eigen::Matrix2cd s12 = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd s21 = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd s22 = Eigen::Matrix2cd::Zero();  // right reflection

    static SMatrix identity() { return {}; }
};

/// Redheffer star product: `left` then `right`, reference planes coinciding.
SMatrix star(const SMatrix& left, const SMatrix& right);

/// Free propagation over distance d at wavenumber k.
SMatrix propagation_smatrix(double k, double d);

/// S-matrix of a thin polarizable scatterer with tensor polarizability zeta.
SMatrix atom_smatrix(const Eigen::Matrix2cd& zeta);

/// Conversion to the transfer-tensor picture; throws SingularSystemError when
/// the left-to-right transmission block is not invertible.
TransferTensor smatrix_to_tensor(const SMatrix& s, const std::string& element_name);

}  // namespace polscat
