#include "polscat/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "polscat/beams.hpp"
#include "polscat/force.hpp"

namespace polscat {

namespace {

constexpr double kHbarSi = 1.054571817e-34;      // J s
constexpr double kSpeedOfLightSi = 299792458.0;  // m/s

ScanRow compute_row(const Scenario& sc, const LevelScheme& scheme, double kx, double v) {
    ScanRow row;
    row.kx = kx;
    row.v = v;

    const double k = sc.wavenumber;
    const double x = kx / k;

    BeamPair beams;
    FieldProfile profile;
    if (sc.configuration == Configuration::LinPerpLin) {
        beams = lin_perp_lin_beams(sc.beam_amplitude, k, x);
        profile = [&sc, k](double xp) {
            BeamPair bp = lin_perp_lin_beams(sc.beam_amplitude, k, xp);
            return local_field(bp.b, bp.c, xp);
        };
    } else if (sc.configuration == Configuration::SigmaPlusMinus) {
        beams = sigma_beams(sc.beam_amplitude, k, x);
        profile = [&sc, k](double xp) {
            BeamPair bp = sigma_beams(sc.beam_amplitude, k, xp);
            return local_field(bp.b, bp.c, xp);
        };
    } else {
        // Custom system: the scan grid positions the atom.
        JonesVector b_in{sc.input_b(0), sc.input_b(1), k, Basis::Circular};
        JonesVector c_in{sc.input_c(0), sc.input_c(1), k, Basis::Circular};
        auto solve_at = [&sc, &scheme, b_in, c_in](double xp) {
            std::vector<Element> els = sc.elements;
            for (auto& e : els)
                if (e.is_atom()) e.position = xp;
            std::sort(els.begin(), els.end(),
                      [](const Element& a, const Element& b) { return a.position < b.position; });
            return solve_system(els, b_in, c_in, scheme);
        };
        SystemSolution sol = solve_at(x);
        beams = {sol.b_local, sol.c_local};
        profile = [solve_at](double xp) { return solve_at(xp).local_field; };
    }

    GroundDensityMatrix rho =
        nonadiabatic_populations(scheme, profile, PumpingParameters{sc.tau_p, v}, x);
    PolarizabilityTensor zeta = polarizability(scheme, rho);
    ForceExpansion f = force_expansion(zeta, beams.b, beams.c, v);

    row.force_total = f.approx.total;
    row.force_position = f.approx.position_term;
    row.force_friction = f.approx.friction_term;
    for (int i = 0; i < rho.size(); ++i)
        row.populations.push_back(rho.matrix()(i, i).real());
    row.coherence = rho.edge_coherence();
    return row;
}

}  // namespace

std::uint64_t scenario_hash(const Scenario& scenario) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : scenario.canonical_json()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ScanResult run_scan(const Scenario& scenario, int threads) {
    if (threads < 1) throw InvalidInputError("run_scan: threads must be >= 1");

    const LevelScheme scheme = scenario.scheme();
    const std::vector<double> xs = scenario.x_grid.points();
    const std::vector<double> vs = scenario.v_grid.points();

    ScanResult result;
    result.scenario_hash = scenario_hash(scenario);
    result.population_count = scheme.ground_count();
    result.rows.resize(xs.size() * vs.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double kx = xs[i / vs.size()];
            const double v = vs[i % vs.size()];
            try {
                result.rows[i] = compute_row(scenario, scheme, kx, v);
            } catch (const std::exception& e) {
                ScanRow row;
                row.kx = kx;
                row.v = v;
                row.populations.assign(static_cast<std::size_t>(scheme.ground_count()), 0.0);
                row.error = e.what();
                result.rows[i] = row;
            }
        }
    };

    const std::size_t total = result.rows.size();
    if (threads == 1 || total < 2) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
        const std::size_t chunk = (total + n - 1) / n;
        for (std::size_t t = 0; t < n; ++t)
            pool.emplace_back(work, t * chunk, std::min(total, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    for (const auto& row : result.rows)
        if (!row.error.empty()) result.any_error = true;
    return result;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(const ScanResult& result, const Scenario& scenario, std::ostream& os,
               Units units) {
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(result.scenario_hash));
    os << "# polscat scan schema_version=" << scenario.schema_version << " scenario_hash="
       << hash << " units=" << (units == Units::Natural ? "natural" : "si") << "\n";

    os << (units == Units::Natural ? "kx,v" : "x_m,v_mps");
    os << ",force_total,force_position,force_friction";
    const double j = 0.5 * (result.population_count - 1);
    for (int i = 0; i < result.population_count; ++i) {
        double m = -j + i;
        char name[32];
        if (std::abs(m - std::round(m)) < 0.25)
            std::snprintf(name, sizeof(name), "%+d", static_cast<int>(std::round(m)));
        else
            std::snprintf(name, sizeof(name), "%+.1f", m);
        os << ",pop_m" << name;
    }
    os << ",coherence_re,coherence_im,error\n";

    // Natural force unit is hbar k per unit photon flux; SI multiplies by
    // hbar k with k per meter and flux per second.
    const double force_scale =
        (units == Units::Natural) ? 1.0 : kHbarSi * scenario.wavenumber;
    for (const auto& row : result.rows) {
        if (units == Units::Natural)
            os << format_double(row.kx) << ',' << format_double(row.v);
        else
            os << format_double(row.kx / scenario.wavenumber) << ','
               << format_double(row.v * kSpeedOfLightSi);
        os << ',' << format_double(row.force_total * force_scale) << ','
           << format_double(row.force_position * force_scale) << ','
           << format_double(row.force_friction * force_scale);
        for (double p : row.populations) os << ',' << format_double(p);
        os << ',' << format_double(row.coherence.real()) << ','
           << format_double(row.coherence.imag());
        std::string err = row.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        os << ',' << err << "\n";
    }
}

}  // namespace polscat
