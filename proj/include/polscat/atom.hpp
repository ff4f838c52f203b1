#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "polscat/clebsch.hpp"
#include "polscat/errors.hpp"
#include "polscat/jones.hpp"

namespace polscat {

/// Ground/excited angular momenta of a dipole transition, the characteristic
/// polarizability zeta0 and its dispersion derivative, plus the full table of
/// dipole (Clebsch-Gordan) coupling coefficients.
class LevelScheme {
public:
    LevelScheme(double j_ground, double j_excited, Complex zeta0,
                Complex dzeta0_dk = Complex(0.0, 0.0));

    double j_ground() const { return jg_; }
    double j_excited() const { return je_; }
    int ground_count() const { return ng_; }
    int excited_count() const { return ne_; }
    Complex zeta0() const { return zeta0_; }
    Complex dzeta0_dk() const { return dzeta0_dk_; }

    double ground_m(int index) const { return -jg_ + index; }
    double excited_m(int index) const { return -je_ + index; }
    int ground_index(double m) const;

    /// <j_g m; 1 q | j_e, m+q> for ground sublevel index i; zero when the
    /// target excited sublevel does not exist.
    double dipole(int ground_index, int q) const;

private:
    double jg_, je_;
    int ng_, ne_;
    Complex zeta0_, dzeta0_dk_;
    std::vector<double> cg_;  // [index * 3 + (q + 1)]
};

/// Hermitian, unit-trace matrix over the ground sublevels, indexed by
/// magnetic quantum number. Diagonal entries are the populations Pi_m,
/// off-diagonal ones the coherences.
class GroundDensityMatrix {
public:
    /// Validates hermiticity and unit trace (1e-12). Positivity is checked
    /// only when `require_positive` is set: first-order velocity corrections
    /// legitimately produce small negative eigenvalues.
    explicit GroundDensityMatrix(Eigen::MatrixXcd entries, bool require_positive = false);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }
    double j() const { return 0.5 * (size() - 1); }

    double population(double m) const;
    Complex coherence(double m_row, double m_col) const;

    /// Coherence between the extreme sublevels, <+j|rho|-j>.
    Complex edge_coherence() const { return m_(size() - 1, 0); }

private:
    int index(double m) const;
    Eigen::MatrixXcd m_;
};

/// 2x2 polarizability tensor zeta in the (sigma+, sigma-) basis together
/// with its wavenumber derivative.
struct PolarizabilityTensor {
    Eigen::Matrix2cd zeta = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd dzeta_dk = Eigen::Matrix2cd::Zero();
};

/// Matrix element <i| chi |j> of the polarizability operator: zeta0 times the
/// outer products of sigma+/sigma- dipole amplitudes summed over the excited
/// sublevels. Indices are 0-based ground sublevel indices (m = index - j_g).
Eigen::Matrix2cd chi_element(const LevelScheme& scheme, int i, int j);

/// zeta = Tr(rho . chi) = sum_{i,j} <j|rho|i> chi(i,j); the dispersion block
/// scales identically with dzeta0_dk in place of zeta0.
PolarizabilityTensor polarizability(const LevelScheme& scheme, const GroundDensityMatrix& rho);

}  // namespace polscat
