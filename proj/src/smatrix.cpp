#include "polscat/smatrix.hpp"

#include <cmath>

namespace polscat {

using Eigen::Matrix2cd;

SMatrix star(const SMatrix& left, const SMatrix& right) {
    const Matrix2cd id = Matrix2cd::Identity();

    Eigen::FullPivLU<Matrix2cd> lu_ba(id - right.s11 * left.s22);
    Eigen::FullPivLU<Matrix2cd> lu_ab(id - left.s22 * right.s11);
    if (!lu_ba.isInvertible() || !lu_ab.isInvertible())
        throw SingularSystemError("star: interface round trip is singular");

    const Matrix2cd e = left.s12 * lu_ba.inverse();
    const Matrix2cd f = right.s21 * lu_ab.inverse();

    SMatrix out;
    out.s11 = left.s11 + e * right.s11 * left.s21;
    out.s12 = e * right.s12;
    out.s21 = f * left.s21;
    out.s22 = right.s22 + f * left.s22 * right.s12;
    return out;
}

SMatrix propagation_smatrix(double k, double d) {
    const Complex phase = std::exp(Complex(0.0, k * d));
    SMatrix s;
    s.s11 = Matrix2cd::Zero();
    s.s12 = phase * Matrix2cd::Identity();
    s.s21 = phase * Matrix2cd::Identity();
    s.s22 = Matrix2cd::Zero();
    return s;
}

SMatrix atom_smatrix(const Eigen::Matrix2cd& zeta) {
    const Complex i(0.0, 1.0);
    const Matrix2cd id = Matrix2cd::Identity();
    Eigen::FullPivLU<Matrix2cd> lu(id - i * zeta);
    if (!lu.isInvertible())
        throw SingularSystemError("atom: 1 - i zeta is singular");
    const Matrix2cd w = lu.inverse();

    SMatrix s;
    s.s11 = i * zeta * w;
    s.s12 = w;
    s.s21 = w;
    s.s22 = i * zeta * w;
    return s;
}

TransferTensor smatrix_to_tensor(const SMatrix& s, const std::string& element_name) {
    Eigen::FullPivLU<Matrix2cd> lu(s.s21);
    if (!lu.isInvertible())
        throw SingularSystemError("element '" + element_name +
                                  "' has no transfer tensor: transmission block is singular");
    const Matrix2cd t_inv = lu.inverse();

    TransferTensor m;
    m.m11 = s.s12 - s.s11 * t_inv * s.s22;
    m.m12 = s.s11 * t_inv;
    m.m21 = -t_inv * s.s22;
    m.m22 = t_inv;
    return m;
}

}  // namespace polscat
