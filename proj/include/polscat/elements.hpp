#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polscat/bloch.hpp"
#include "polscat/smatrix.hpp"

namespace polscat {

/// Immobile linear elements plus the single polarizable atom. Thin elements
/// sit at a point; free propagation between consecutive positions is implied.
/// A gap adds extra optical path on top of the geometric separation.
struct Element {
    struct Atom {};
    struct Mirror {
        Complex r_mu;  // reflectivity seen by the sigma+ component
        Complex r_nu;
    };
    struct Waveplate {
        double retardance;
        double axis_angle;
    };
    struct Rotator {
        double angle;
    };
    struct Gap {
        double length;
    };
    using Params = std::variant<Atom, Mirror, Waveplate, Rotator, Gap>;

    Params params;
    double position = 0.0;

    static Element atom(double position);
    static Element mirror(double position, Complex r_mu, Complex r_nu);
    static Element mirror(double position, Complex r) { return mirror(position, r, r); }
    static Element waveplate(double position, double retardance, double axis_angle);
    static Element rotator(double position, double angle);
    static Element gap(double position, double length);

    bool is_atom() const { return std::holds_alternative<Atom>(params); }
    std::string kind_name() const;
};

/// S-matrix of a single immobile element at wavenumber k. Atom elements need
/// a polarizability and are rejected here; use atom_smatrix for them.
SMatrix element_smatrix(const Element& e, double k);

/// Transfer tensor of a single immobile element. Throws SingularSystemError
/// for elements without a transmissive channel (|r| = 1 mirrors).
TransferTensor element_tensor(const Element& e, double k);

struct SolveOptions {
    int max_iterations = 200;
    double tolerance = 1e-12;
    double damping = 1.0;  // fraction of each update applied; 0.5 = damped
    std::optional<Eigen::MatrixXcd> initial_rho;
};

struct SystemSolution {
    JonesVector b_local;  // rightward mode illuminating the atom
    JonesVector c_local;  // leftward mode illuminating the atom
    LocalField local_field;
    ModeQuartet boundary;  // modes at the outermost element planes
    GroundDensityMatrix rho;
    int iterations = 0;
};

/// Self-consistent solution of one atom inside a linear system: propagate the
/// inputs to the atom for a trial rho, feed the local field to the pumping
/// steady state, rebuild the atom's polarizability, iterate to a fixed point.
/// b_in is referenced at the leftmost element plane, c_in at the rightmost.
SystemSolution solve_system(const std::vector<Element>& elements, const JonesVector& b_in,
                            const JonesVector& c_in, const LevelScheme& scheme,
                            const SolveOptions& options = {});

}  // namespace polscat
