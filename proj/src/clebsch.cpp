#include "polscat/clebsch.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>

#include "polscat/errors.hpp"

namespace polscat {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;

namespace {

// Quantum numbers handled as doubled integers so half-integer cases stay exact.
int twice(double j) {
    double t = 2.0 * j;
    double r = std::round(t);
    if (!std::isfinite(t) || std::abs(t - r) > 1e-9)
        throw InvalidInputError("angular momentum must be integer or half-integer");
    return static_cast<int>(r);
}

mp::cpp_int factorial(int n) {
    mp::cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Factorial of a doubled-integer argument; the caller guarantees evenness.
mp::cpp_int fact2(int twice_n) {
    if (twice_n < 0 || twice_n % 2 != 0)
        throw InvalidInputError("Clebsch-Gordan: non-integer factorial argument");
    return factorial(twice_n / 2);
}

struct CgExact {
    Rational squared;  // cg^2
    int sign;          // sign of cg
};

// Racah's closed form, evaluated in exact rational arithmetic.
CgExact cg_exact(int tj1, int tm1, int tj2, int tm2, int tJ) {
    const int tM = tm1 + tm2;
    if (tj1 < 0 || tj2 < 0 || tJ < 0)
        throw InvalidInputError("Clebsch-Gordan: negative angular momentum");
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj1 + tj2 + tJ) % 2 != 0)
        throw InvalidInputError("Clebsch-Gordan: m incompatible with j");
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2) return {Rational(0), 0};
    if (std::abs(tM) > tJ) return {Rational(0), 0};
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return {Rational(0), 0};

    const Rational delta = Rational(fact2(tj1 + tj2 - tJ) * fact2(tj1 - tj2 + tJ) *
                                    fact2(-tj1 + tj2 + tJ)) /
                           Rational(fact2(tj1 + tj2 + tJ + 2));
    const Rational pref = Rational(tJ + 1) * delta *
                          Rational(fact2(tJ + tM) * fact2(tJ - tM) * fact2(tj1 - tm1) *
                                   fact2(tj1 + tm1) * fact2(tj2 - tm2) * fact2(tj2 + tm2));

    Rational sum = 0;
    const int kmin = std::max({0, -(tJ - tj2 + tm1) / 2, -(tJ - tj1 - tm2) / 2});
    const int kmax = std::min({(tj1 + tj2 - tJ) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    for (int k = kmin; k <= kmax; ++k) {
        Rational term = Rational(1) /
                        Rational(factorial(k) * fact2(tj1 + tj2 - tJ - 2 * k) *
                                 fact2(tj1 - tm1 - 2 * k) * fact2(tj2 + tm2 - 2 * k) *
                                 fact2(tJ - tj2 + tm1 + 2 * k) * fact2(tJ - tj1 - tm2 + 2 * k));
        sum += (k % 2 == 0) ? term : -term;
    }

    int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return {pref * sum * sum, sign};
}

CgExact cg_dipole(double j_g, double m_g, int q, double j_e) {
    if (q < -1 || q > 1) throw InvalidInputError("Clebsch-Gordan: q must be -1, 0 or +1");
    int tjg = twice(j_g), tje = twice(j_e), tmg = twice(m_g);
    if (tjg < 0 || tje < 0)
        throw InvalidInputError("Clebsch-Gordan: negative angular momentum");
    return cg_exact(tjg, tmg, 2, 2 * q, tje);
}

}  // namespace

double clebsch_gordan(double j_g, double m_g, int q, double j_e) {
    CgExact cg = cg_dipole(j_g, m_g, q, j_e);
    return cg.sign * std::sqrt(static_cast<double>(cg.squared));
}

Fraction clebsch_gordan_squared(double j_g, double m_g, int q, double j_e) {
    CgExact cg = cg_dipole(j_g, m_g, q, j_e);
    Fraction f;
    f.num = static_cast<std::int64_t>(mp::numerator(cg.squared));
    f.den = static_cast<std::int64_t>(mp::denominator(cg.squared));
    return f;
}

double clebsch_gordan_general(double j1, double m1, double j2, double m2, double J) {
    CgExact cg = cg_exact(twice(j1), twice(m1), twice(j2), twice(m2), twice(J));
    return cg.sign * std::sqrt(static_cast<double>(cg.squared));
}

}  // namespace polscat
