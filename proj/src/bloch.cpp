#include "polscat/bloch.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace polscat {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

// Lowering operator A_q mapping excited to ground sublevels with CG weights.
MatrixXcd lowering(const LevelScheme& s, int q) {
    MatrixXcd a = MatrixXcd::Zero(s.ground_count(), s.excited_count());
    for (int i = 0; i < s.ground_count(); ++i) {
        double me = s.ground_m(i) + q;
        if (std::abs(me) > s.j_excited() + 1e-9) continue;
        int e = static_cast<int>(std::lround(me + s.j_excited()));
        a(i, e) = s.dipole(i, q);
    }
    return a;
}

std::string format_m(double m) {
    std::ostringstream os;
    os << (m >= 0 ? "+" : "") << m;
    return os.str();
}

}  // namespace

GroundLevelGenerator::GroundLevelGenerator(const LevelScheme& scheme, const LocalField& field)
    : n_(scheme.ground_count()) {
    const double intensity = field.intensity();
    if (!(intensity > 0.0) || !std::isfinite(intensity))
        throw InvalidInputError("steady_state: local field vanishes");

    const double scale = 1.0 / std::sqrt(intensity);
    const Complex ep = field.e_plus * scale;
    const Complex em = field.e_minus * scale;

    MatrixXcd a_plus = lowering(scheme, +1);
    MatrixXcd a_minus = lowering(scheme, -1);
    MatrixXcd w = ep * a_plus.adjoint() + em * a_minus.adjoint();

    g_ = w.adjoint() * w;
    jumps_.clear();
    for (int q = -1; q <= 1; ++q) jumps_.push_back(lowering(scheme, q) * w);

    const MatrixXcd id = MatrixXcd::Identity(n_, n_);
    superop_ = MatrixXcd::Zero(n_ * n_, n_ * n_);
    for (const auto& j : jumps_)
        superop_ += Eigen::kroneckerProduct(j.conjugate(), j);
    superop_ -= 0.5 * Eigen::kroneckerProduct(id, g_);
    superop_ -= 0.5 * Eigen::kroneckerProduct(g_.transpose(), id);
}

MatrixXcd GroundLevelGenerator::apply(const MatrixXcd& rho) const {
    MatrixXcd out = -0.5 * (g_ * rho + rho * g_);
    for (const auto& j : jumps_) out += j * rho * j.adjoint();
    return out;
}

GroundDensityMatrix GroundLevelGenerator::steady_state() const {
    Eigen::JacobiSVD<MatrixXcd> svd(superop_, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-10 * sv(0);

    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol) ++null_dim;

    if (null_dim == 0)
        throw Error("steady_state: generator has no stationary state (numerical failure)");

    if (null_dim > 1) {
        // Describe each stationary direction by its dominant |m><m'| component.
        std::vector<std::string> states;
        for (int d = 0; d < null_dim; ++d) {
            VectorXcd v = svd.matrixV().col(sv.size() - 1 - d);
            Eigen::Index imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            double j = 0.5 * (n_ - 1);
            double m_row = -j + static_cast<double>(imax % n_);
            double m_col = -j + static_cast<double>(imax / n_);
            states.push_back("|m=" + format_m(m_row) + "><m=" + format_m(m_col) + "|");
        }
        std::string msg = "steady_state: stationary manifold has dimension " +
                          std::to_string(null_dim) + " (dark states): ";
        for (std::size_t i = 0; i < states.size(); ++i)
            msg += (i ? ", " : "") + states[i];
        throw DarkStateError(msg, states);
    }

    VectorXcd v = svd.matrixV().col(sv.size() - 1);
    MatrixXcd rho = Eigen::Map<const MatrixXcd>(v.data(), n_, n_);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    Complex tr = rho.trace();
    if (std::abs(tr) < 1e-8)
        throw Error("steady_state: stationary direction is traceless");
    rho /= tr;

    return GroundDensityMatrix(rho, /*require_positive=*/true);
}

GroundDensityMatrix steady_state(const LevelScheme& scheme, const LocalField& field) {
    return GroundLevelGenerator(scheme, field).steady_state();
}

GroundDensityMatrix nonadiabatic_populations(const LevelScheme& scheme,
                                             const FieldProfile& profile,
                                             const PumpingParameters& params, double x) {
    if (!(params.tau_p > 0.0))
        throw InvalidInputError("nonadiabatic_populations: tau_p must be positive");

    LocalField here = profile(x);
    GroundDensityMatrix rho0 = steady_state(scheme, here);
    if (params.v == 0.0) return rho0;

    const double h = 1e-6 / here.k;
    MatrixXcd plus = steady_state(scheme, profile(x + h)).matrix();
    MatrixXcd minus = steady_state(scheme, profile(x - h)).matrix();
    MatrixXcd drho_dx = (plus - minus) / (2.0 * h);

    // The exact derivative is Hermitian and traceless; project out the
    // rounding noise the 1/h amplifies.
    drho_dx = 0.5 * (drho_dx + drho_dx.adjoint()).eval();
    drho_dx -= (drho_dx.trace() / static_cast<double>(drho_dx.rows())) *
               MatrixXcd::Identity(drho_dx.rows(), drho_dx.cols());

    return GroundDensityMatrix(rho0.matrix() - params.v * params.tau_p * drho_dx);
}

}  // namespace polscat
