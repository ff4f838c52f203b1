#pragma once

#include <cstdint>

namespace polscat {

/// Reduced fraction num/den with den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// <j_g m_g; 1 q | j_e, m_g + q> with Condon-Shortley phases.
/// Returns 0 when selection rules exclude the transition.
/// Throws InvalidInputError for negative or non-half-integer angular momenta.
double clebsch_gordan(double j_g, double m_g, int q, double j_e);

/// The squared coefficient as an exact reduced rational.
Fraction clebsch_gordan_squared(double j_g, double m_g, int q, double j_e);

/// General coupling <j1 m1; j2 m2 | J, m1+m2>, used by the dipole table above.
double clebsch_gordan_general(double j1, double m1, double j2, double m2, double J);

}  // namespace polscat
