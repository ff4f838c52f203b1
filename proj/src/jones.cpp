#include "polscat/jones.hpp"

#include <cmath>

namespace polscat {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool finite(const Matrix2cd& m) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!finite(m(r, c))) return false;
    return true;
}

}  // namespace

JonesVector::JonesVector(Complex mu_, Complex nu_, double k_, Basis basis_)
    : mu(mu_), nu(nu_), k(k_), basis(basis_) {
    if (!finite(mu) || !finite(nu) || !std::isfinite(k))
        throw InvalidInputError("JonesVector: non-finite component");
}

Eigen::Matrix2cd linear_to_circular_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix2cd u;
    u << Complex(s, 0), Complex(0, -s),
        Complex(-s, 0), Complex(0, -s);
    return u;
}

JonesVector to_circular(const JonesVector& v) {
    if (v.basis == Basis::Circular) return v;
    Vector2cd c = linear_to_circular_matrix() * v.vec();
    return {c(0), c(1), v.k, Basis::Circular};
}

JonesVector to_linear(const JonesVector& v) {
    if (v.basis == Basis::Linear) return v;
    Vector2cd l = linear_to_circular_matrix().adjoint() * v.vec();
    return {l(0), l(1), v.k, Basis::Linear};
}

void require_compatible(const JonesVector& a, const JonesVector& b) {
    if (a.basis != b.basis)
        throw InvalidInputError("Jones vectors carry different polarization bases");
    if (a.k != b.k)
        throw InvalidInputError("Jones vectors carry different wavenumbers");
}

TransferTensor TransferTensor::identity() {
    return {Matrix2cd::Identity(), Matrix2cd::Zero(), Matrix2cd::Zero(), Matrix2cd::Identity()};
}

Matrix4cd TransferTensor::as_matrix() const {
    Matrix4cd m;
    m.block<2, 2>(0, 0) = m11;
    m.block<2, 2>(0, 2) = m12;
    m.block<2, 2>(2, 0) = m21;
    m.block<2, 2>(2, 2) = m22;
    return m;
}

TransferTensor TransferTensor::from_matrix(const Matrix4cd& m) {
    return {m.block<2, 2>(0, 0), m.block<2, 2>(0, 2), m.block<2, 2>(2, 0), m.block<2, 2>(2, 2)};
}

TransferTensor transfer_tensor(const Eigen::Matrix2cd& zeta) {
    if (!finite(zeta)) throw InvalidInputError("transfer_tensor: non-finite polarizability");
    const Complex i(0.0, 1.0);
    const Matrix2cd one = Matrix2cd::Identity();
    TransferTensor t;
    t.m11 = one + i * zeta;
    t.m12 = i * zeta;
    t.m21 = -i * zeta;
    t.m22 = one - i * zeta;
    return t;
}

TransferTensor compose(const TransferTensor& left, const TransferTensor& right) {
    return TransferTensor::from_matrix(left.as_matrix() * right.as_matrix());
}

ModeQuartet scatter(const TransferTensor& t, const JonesVector& b_in, const JonesVector& c_in) {
    require_compatible(b_in, c_in);

    // B = m21 C + m22 D  ->  D = m22^{-1} (B - m21 C)
    Eigen::FullPivLU<Matrix2cd> lu(t.m22);
    if (!lu.isInvertible())
        throw SingularSystemError("scatter: singular m22 block (no transmissive channel)");
    Vector2cd d = lu.solve(b_in.vec() - t.m21 * c_in.vec());
    Vector2cd a = t.m11 * c_in.vec() + t.m12 * d;

    return {b_in.with(a), b_in, c_in, b_in.with(d)};
}

}  // namespace polscat
