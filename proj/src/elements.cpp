#include "polscat/elements.hpp"

#include <cmath>
#include <limits>

namespace polscat {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::Vector2cd;
using Eigen::Vector4cd;

Element Element::atom(double position) { return {Atom{}, position}; }

Element Element::mirror(double position, Complex r_mu, Complex r_nu) {
    if (std::abs(r_mu) > 1.0 + 1e-12 || std::abs(r_nu) > 1.0 + 1e-12)
        throw InvalidInputError("mirror: |reflectivity| must not exceed 1");
    return {Mirror{r_mu, r_nu}, position};
}

Element Element::waveplate(double position, double retardance, double axis_angle) {
    return {Waveplate{retardance, axis_angle}, position};
}

Element Element::rotator(double position, double angle) { return {Rotator{angle}, position}; }

Element Element::gap(double position, double length) {
    if (length < 0.0) throw InvalidInputError("gap: length must be non-negative");
    return {Gap{length}, position};
}

std::string Element::kind_name() const {
    struct Visitor {
        std::string operator()(const Atom&) const { return "atom"; }
        std::string operator()(const Mirror&) const { return "mirror"; }
        std::string operator()(const Waveplate&) const { return "waveplate"; }
        std::string operator()(const Rotator&) const { return "rotator"; }
        std::string operator()(const Gap&) const { return "gap"; }
    };
    return std::visit(Visitor{}, params);
}

namespace {

// Jones matrix of a transmissive element for rightward passage, in the
// circular basis. Backward passage uses the transpose taken in the linear
// basis (reciprocity).
Matrix2cd waveplate_jones_linear(double retardance, double axis_angle) {
    Matrix2cd rot, ret;
    const double c = std::cos(axis_angle), s = std::sin(axis_angle);
    rot << c, -s, s, c;
    ret << 1.0, 0.0, 0.0, std::exp(Complex(0.0, retardance));
    return rot * ret * rot.transpose();
}

Matrix2cd rotator_jones_linear(double angle) {
    Matrix2cd rot;
    const double c = std::cos(angle), s = std::sin(angle);
    rot << c, -s, s, c;
    return rot;
}

SMatrix transmissive_smatrix(const Matrix2cd& jones_linear) {
    const Matrix2cd u = linear_to_circular_matrix();
    SMatrix s;
    s.s11 = Matrix2cd::Zero();
    s.s22 = Matrix2cd::Zero();
    s.s21 = u * jones_linear * u.adjoint();
    s.s12 = u * jones_linear.transpose() * u.adjoint();
    return s;
}

}  // namespace

SMatrix element_smatrix(const Element& e, double k) {
    struct Visitor {
        double k;
        SMatrix operator()(const Element::Atom&) const {
            throw InvalidInputError("element_smatrix: atom needs a polarizability; "
                                    "use atom_smatrix");
        }
        SMatrix operator()(const Element::Mirror& m) const {
            if (std::abs(m.r_mu) > 1.0 + 1e-12 || std::abs(m.r_nu) > 1.0 + 1e-12)
                throw InvalidInputError("mirror: |reflectivity| must not exceed 1");
            // Lossless completion: t = sqrt(1 - |r|^2) per polarization, with
            // back reflection -r* to keep the two-port unitary.
            Matrix2cd r = Matrix2cd::Zero(), rb = Matrix2cd::Zero(), t = Matrix2cd::Zero();
            const Complex rr[2] = {m.r_mu, m.r_nu};
            for (int p = 0; p < 2; ++p) {
                r(p, p) = rr[p];
                rb(p, p) = -std::conj(rr[p]);
                t(p, p) = std::sqrt(std::max(0.0, 1.0 - std::norm(rr[p])));
            }
            SMatrix s;
            s.s11 = r;
            s.s12 = t;
            s.s21 = t;
            s.s22 = rb;
            return s;
        }
        SMatrix operator()(const Element::Waveplate& w) const {
            return transmissive_smatrix(waveplate_jones_linear(w.retardance, w.axis_angle));
        }
        SMatrix operator()(const Element::Rotator& r) const {
            return transmissive_smatrix(rotator_jones_linear(r.angle));
        }
        SMatrix operator()(const Element::Gap& g) const {
            if (g.length < 0.0) throw InvalidInputError("gap: length must be non-negative");
            return propagation_smatrix(k, g.length);
        }
    };
    return std::visit(Visitor{k}, e.params);
}

TransferTensor element_tensor(const Element& e, double k) {
    return smatrix_to_tensor(element_smatrix(e, k), e.kind_name());
}

namespace {

struct SplitSystem {
    SMatrix left;   // from the leftmost element plane up to the atom plane
    SMatrix right;  // from the atom plane up to the rightmost element plane
    std::size_t atom_index = 0;
};

SplitSystem split_at_atom(const std::vector<Element>& elements, double k) {
    if (elements.empty())
        throw InvalidInputError("solve_system: element list is empty");

    std::size_t atom_count = 0, atom_index = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0 && !(elements[i].position > elements[i - 1].position))
            throw InvalidInputError("solve_system: element positions must strictly increase");
        if (elements[i].is_atom()) {
            ++atom_count;
            atom_index = i;
        }
    }
    if (atom_count != 1)
        throw UnsupportedConfigurationError(
            "solve_system: exactly one atom element is required, found " +
            std::to_string(atom_count));

    SplitSystem out;
    out.atom_index = atom_index;
    out.left = SMatrix::identity();
    for (std::size_t i = 0; i < atom_index; ++i) {
        out.left = star(out.left, element_smatrix(elements[i], k));
        double next = elements[i + 1].position;
        out.left = star(out.left, propagation_smatrix(k, next - elements[i].position));
    }
    out.right = SMatrix::identity();
    for (std::size_t i = atom_index + 1; i < elements.size(); ++i) {
        out.right = star(out.right, propagation_smatrix(
                                        k, elements[i].position - elements[i - 1].position));
        out.right = star(out.right, element_smatrix(elements[i], k));
    }
    return out;
}

// Incoming modes at the atom plane for a given atom scattering matrix.
std::pair<Vector2cd, Vector2cd> local_modes(const SplitSystem& sys, const SMatrix& atom,
                                            const Vector2cd& b0, const Vector2cd& c0) {
    // b_a = L21 b0 + L22 a_a,  c_a = R11 d_a + R12 c0,
    // (a_a, d_a) = S_atom (b_a, c_a).
    Matrix4cd m = Matrix4cd::Identity();
    m.block<2, 2>(0, 0) -= sys.left.s22 * atom.s11;
    m.block<2, 2>(0, 2) = -sys.left.s22 * atom.s12;
    m.block<2, 2>(2, 0) = -sys.right.s11 * atom.s21;
    m.block<2, 2>(2, 2) -= sys.right.s11 * atom.s22;

    Vector4cd rhs;
    rhs.head<2>() = sys.left.s21 * b0;
    rhs.tail<2>() = sys.right.s12 * c0;

    Eigen::FullPivLU<Matrix4cd> lu(m);
    if (!lu.isInvertible())
        throw SingularSystemError("solve_system: the cavity round-trip solve is singular");
    Vector4cd bc = lu.solve(rhs);
    return {bc.head<2>(), bc.tail<2>()};
}

}  // namespace

SystemSolution solve_system(const std::vector<Element>& elements, const JonesVector& b_in,
                            const JonesVector& c_in, const LevelScheme& scheme,
                            const SolveOptions& options) {
    require_compatible(b_in, c_in);
    if (b_in.basis != Basis::Circular)
        throw InvalidInputError("solve_system: inputs must be in the circular basis");
    const double k = b_in.k;

    SplitSystem sys = split_at_atom(elements, k);
    const double atom_x = elements[sys.atom_index].position;
    const int n = scheme.ground_count();

    MatrixXcd rho = options.initial_rho.value_or(
        MatrixXcd::Identity(n, n) / static_cast<double>(n));
    if (rho.rows() != n || rho.cols() != n)
        throw InvalidInputError("solve_system: initial rho does not match the level scheme");

    const Vector2cd b0 = b_in.vec();
    const Vector2cd c0 = c_in.vec();

    Vector2cd b_a = Vector2cd::Zero(), c_a = Vector2cd::Zero();
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;

    for (int it = 1; it <= options.max_iterations; ++it) {
        iterations = it;
        Matrix2cd zeta = polarizability(scheme, GroundDensityMatrix(rho)).zeta;
        std::tie(b_a, c_a) = local_modes(sys, atom_smatrix(zeta), b0, c0);

        LocalField field{b_a(0) + c_a(0), b_a(1) + c_a(1), k, atom_x};
        MatrixXcd next = steady_state(scheme, field).matrix();
        MatrixXcd updated = rho + options.damping * (next - rho);

        residual = (updated - rho).norm();
        rho = updated;
        if (residual < options.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("solve_system: fixed point not reached after " +
                                   std::to_string(iterations) + " iterations (last residual " +
                                   std::to_string(residual) + ")",
                               residual, iterations);

    // Final pass with the converged rho.
    Matrix2cd zeta = polarizability(scheme, GroundDensityMatrix(rho)).zeta;
    SMatrix atom = atom_smatrix(zeta);
    std::tie(b_a, c_a) = local_modes(sys, atom, b0, c0);
    Vector2cd a_a = atom.s11 * b_a + atom.s12 * c_a;
    Vector2cd d_a = atom.s21 * b_a + atom.s22 * c_a;
    Vector2cd a0 = sys.left.s11 * b0 + sys.left.s12 * a_a;
    Vector2cd d0 = sys.right.s21 * d_a + sys.right.s22 * c0;

    SystemSolution sol{
        b_in.with(b_a),
        b_in.with(c_a),
        LocalField{b_a(0) + c_a(0), b_a(1) + c_a(1), k, atom_x},
        ModeQuartet{b_in.with(a0), b_in, c_in, b_in.with(d0)},
        GroundDensityMatrix(rho, /*require_positive=*/true),
        iterations,
    };
    return sol;
}

}  // namespace polscat
