#include "polscat/atom.hpp"

#include <cmath>

namespace polscat {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;

namespace {

bool half_integer(double j) {
    double t = 2.0 * j;
    return std::isfinite(t) && std::abs(t - std::round(t)) < 1e-9;
}

}  // namespace

LevelScheme::LevelScheme(double j_ground, double j_excited, Complex zeta0, Complex dzeta0_dk)
    : jg_(j_ground), je_(j_excited), zeta0_(zeta0), dzeta0_dk_(dzeta0_dk) {
    if (!half_integer(jg_) || !half_integer(je_) || jg_ < 0 || je_ < 0)
        throw InvalidInputError("LevelScheme: angular momenta must be non-negative half-integers");
    double dj = std::abs(jg_ - je_);
    if (dj > 1.0 + 1e-9 || std::abs(dj - 0.5) < 0.25)
        throw InvalidInputError("LevelScheme: |j_ground - j_excited| must be 0 or 1");
    if (jg_ == 0.0 && je_ == 0.0)
        throw InvalidInputError("LevelScheme: j=0 -> j=0 carries no dipole transition");

    ng_ = static_cast<int>(std::lround(2.0 * jg_)) + 1;
    ne_ = static_cast<int>(std::lround(2.0 * je_)) + 1;

    cg_.assign(static_cast<std::size_t>(ng_) * 3, 0.0);
    for (int i = 0; i < ng_; ++i) {
        double m = ground_m(i);
        for (int q = -1; q <= 1; ++q) {
            if (std::abs(m + q) <= je_ + 1e-9)
                cg_[static_cast<std::size_t>(i) * 3 + (q + 1)] = clebsch_gordan(jg_, m, q, je_);
        }
    }
}

int LevelScheme::ground_index(double m) const {
    int i = static_cast<int>(std::lround(m + jg_));
    if (i < 0 || i >= ng_ || std::abs(ground_m(i) - m) > 1e-9)
        throw InvalidInputError("LevelScheme: no ground sublevel with that m");
    return i;
}

double LevelScheme::dipole(int ground_index, int q) const {
    if (ground_index < 0 || ground_index >= ng_)
        throw InvalidInputError("LevelScheme: ground index out of range");
    if (q < -1 || q > 1) throw InvalidInputError("LevelScheme: q must be -1, 0 or +1");
    return cg_[static_cast<std::size_t>(ground_index) * 3 + (q + 1)];
}

GroundDensityMatrix::GroundDensityMatrix(MatrixXcd entries, bool require_positive)
    : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw InvalidInputError("GroundDensityMatrix: matrix must be square");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidInputError("GroundDensityMatrix: matrix is not Hermitian");
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-12)
        throw InvalidInputError("GroundDensityMatrix: trace must equal 1");
    if (require_positive) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-12)
            throw InvalidInputError("GroundDensityMatrix: negative eigenvalue");
    }
}

int GroundDensityMatrix::index(double m) const {
    int i = static_cast<int>(std::lround(m + j()));
    if (i < 0 || i >= size() || std::abs((-j() + i) - m) > 1e-9)
        throw InvalidInputError("GroundDensityMatrix: no sublevel with that m");
    return i;
}

double GroundDensityMatrix::population(double m) const { return m_(index(m), index(m)).real(); }

Complex GroundDensityMatrix::coherence(double m_row, double m_col) const {
    return m_(index(m_row), index(m_col));
}

namespace {

// chi(i,j) without the zeta0 factor: outer products of (d_mu, d_nu) dipole
// amplitudes summed over excited sublevels. d_mu raises m by one, d_nu lowers it.
Matrix2cd chi_structure(const LevelScheme& scheme, int i, int j) {
    const int n = scheme.ground_count();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw InvalidInputError("chi_element: ground index out of range");

    Matrix2cd chi = Matrix2cd::Zero();
    const double mi = scheme.ground_m(i);
    const double mj = scheme.ground_m(j);
    for (int qi = -1; qi <= 1; qi += 2) {
        for (int qj = -1; qj <= 1; qj += 2) {
            if (mi + qi != mj + qj) continue;  // must reach the same excited sublevel
            if (std::abs(mi + qi) > scheme.j_excited() + 1e-9) continue;
            int row = (qi == 1) ? 0 : 1;
            int col = (qj == 1) ? 0 : 1;
            chi(row, col) += scheme.dipole(i, qi) * scheme.dipole(j, qj);
        }
    }
    return chi;
}

}  // namespace

Eigen::Matrix2cd chi_element(const LevelScheme& scheme, int i, int j) {
    return scheme.zeta0() * chi_structure(scheme, i, j);
}

PolarizabilityTensor polarizability(const LevelScheme& scheme, const GroundDensityMatrix& rho) {
    if (rho.size() != scheme.ground_count())
        throw InvalidInputError("polarizability: density matrix does not match the level scheme");

    Matrix2cd structure = Matrix2cd::Zero();
    const int n = scheme.ground_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex rho_ji = rho.matrix()(j, i);  // <j|rho|i>
            if (rho_ji == Complex(0.0, 0.0)) continue;
            structure += rho_ji * chi_structure(scheme, i, j);
        }

    PolarizabilityTensor out;
    out.zeta = scheme.zeta0() * structure;
    out.dzeta_dk = scheme.dzeta0_dk() * structure;
    return out;
}

}  // namespace polscat
