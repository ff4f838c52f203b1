#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "polscat/scan.hpp"

using namespace polscat;

namespace {

const double kPi = std::numbers::pi;

Scenario parse_ok(const std::string& text) {
    ParseResult r = parse_scenario(text);
    REQUIRE_MESSAGE(r.ok(), (r.errors.empty() ? "?" : r.errors.front()));
    return *r.scenario;
}

std::string csv_of(const Scenario& s, int threads = 1, Units units = Units::Natural) {
    ScanResult res = run_scan(s, threads);
    std::ostringstream os;
    write_csv(res, s, os, units);
    return os.str();
}

}  // namespace

TEST_CASE("minimal lin-perp-lin document gets the documented defaults") {
    Scenario s = parse_ok(R"({"schema_version": 1, "configuration": "lin_perp_lin"})");
    CHECK(s.j_ground == 0.5);
    CHECK(s.j_excited == 1.5);
    CHECK(s.x_grid.count == 64);
    CHECK(s.x_grid.min == 0.0);
    CHECK(s.x_grid.max == doctest::Approx(kPi));
    CHECK_FALSE(s.x_grid.endpoint);
    auto xs = s.x_grid.points();
    CHECK(xs.size() == 64);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() < kPi);

    CHECK(s.v_grid.count == 21);
    auto vs = s.v_grid.points();
    CHECK(vs.size() == 21);
    // k v tau_p spans [-0.1, 0.1] inclusive and contains zero.
    CHECK(vs.front() == doctest::Approx(-0.1));
    CHECK(vs.back() == doctest::Approx(0.1));
    CHECK(std::abs(vs[10]) < 1e-15);
}

TEST_CASE("sigma document selects the j=1 -> 2 scheme") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "sigma_plus_minus",
        "scheme": {"zeta0": 1e-4, "dzeta0_dk_imag": 0.3}
    })");
    CHECK(s.j_ground == 1.0);
    CHECK(s.j_excited == 2.0);
    CHECK(s.scheme().dzeta0_dk() == Complex(0.0, 0.3));
}

TEST_CASE("validation reports every error with its key") {
    ParseResult r = parse_scenario(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "tau_p": -1,
        "beem_amplitude": 2.0,
        "x_grid": {"count": 0}
    })");
    CHECK_FALSE(r.ok());
    CHECK(r.errors.size() >= 3);
    bool saw_tau = false, saw_key = false, saw_count = false;
    for (const auto& e : r.errors) {
        if (e.find("tau_p must be positive") != std::string::npos) saw_tau = true;
        if (e.find("beem_amplitude") != std::string::npos) saw_key = true;
        if (e.find("x_grid.count") != std::string::npos) saw_count = true;
    }
    CHECK(saw_tau);
    CHECK(saw_key);
    CHECK(saw_count);
}

TEST_CASE("configuration names come from the closed set") {
    ParseResult r = parse_scenario(
        R"({"schema_version": 1, "configuration": "linperplin"})");
    CHECK_FALSE(r.ok());
}

TEST_CASE("schema version is checked") {
    ParseResult r = parse_scenario(R"({"schema_version": 2})");
    CHECK_FALSE(r.ok());
    CHECK(r.errors.front().find("legal range") != std::string::npos);
}

TEST_CASE("malformed JSON yields a single parse error") {
    ParseResult r = parse_scenario("{nope");
    CHECK_FALSE(r.ok());
    CHECK(r.errors.size() == 1);
}

TEST_CASE("row count and ordering") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "x_grid": {"count": 5, "min": 0.0, "max": 1.0},
        "v_grid": {"count": 3, "min": -0.1, "max": 0.1, "endpoint": true}
    })");
    ScanResult res = run_scan(s);
    REQUIRE(res.rows.size() == 15);
    // x-major: the v index cycles fastest.
    CHECK(res.rows[0].kx == res.rows[2].kx);
    CHECK(res.rows[0].v < res.rows[1].v);
    CHECK(res.rows[3].kx > res.rows[2].kx);
    CHECK_FALSE(res.any_error);
}

TEST_CASE("scan reproduces the closed-form force at kx = pi/8") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "scheme": {"zeta0": 1e-4},
        "x_grid": {"count": 1, "min": 0.39269908169872414},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    ScanResult res = run_scan(s);
    REQUIRE(res.rows.size() == 1);
    CHECK(res.rows[0].force_total ==
          doctest::Approx(-(2.0 / 3.0) * 1e-4).epsilon(1e-9));
}

TEST_CASE("scan of a single point at the origin gives zero force") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "x_grid": {"count": 1, "min": 0.0},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    ScanResult res = run_scan(s);
    CHECK(std::abs(res.rows[0].force_total) < 1e-15);
}

TEST_CASE("sigma scan at rest carries no force anywhere") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "sigma_plus_minus",
        "x_grid": {"count": 16, "min": 0.0, "max": 3.141592653589793},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    ScanResult res = run_scan(s);
    for (const auto& row : res.rows) {
        CHECK(row.error.empty());
        CHECK(std::abs(row.force_total) < 1e-12);
    }
}

TEST_CASE("identical documents give byte-identical CSV, any thread count") {
    const std::string doc = R"({
        "schema_version": 1,
        "configuration": "sigma_plus_minus",
        "scheme": {"zeta0": 1e-4, "dzeta0_dk_imag": 0.2},
        "x_grid": {"count": 6, "min": 0.0, "max": 3.0},
        "v_grid": {"count": 3, "min": -0.05, "max": 0.05, "endpoint": true}
    })";
    Scenario s1 = parse_ok(doc);
    Scenario s2 = parse_ok(doc);
    std::string a = csv_of(s1, 1);
    std::string b = csv_of(s2, 1);
    std::string c = csv_of(s1, 4);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("numeric fields round-trip bit exactly") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "x_grid": {"count": 3, "min": 0.1, "max": 2.7},
        "v_grid": {"count": 2, "min": -0.07, "max": 0.07, "endpoint": true}
    })");
    ScanResult res = run_scan(s);
    for (const auto& row : res.rows) {
        for (double value : {row.force_total, row.force_position, row.force_friction,
                             row.populations[0], row.coherence.real()}) {
            std::string text = format_double(value);
            double back = std::strtod(text.c_str(), nullptr);
            CHECK(back == value);
        }
    }
}

TEST_CASE("custom configuration parses elements and solves per row") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "custom",
        "scheme": {"j_ground": 1.0, "j_excited": 2.0, "zeta0": 1e-4},
        "elements": [
            {"kind": "atom", "position": 0.0},
            {"kind": "mirror", "position": 4.0, "reflectivity": [-1.0, 0.0]}
        ],
        "inputs": {"b": {"mu": [1.0, 0.0], "nu": [0.0, 0.0]}},
        "x_grid": {"count": 3, "min": 0.3, "max": 1.2, "endpoint": true},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    ScanResult res = run_scan(s);
    REQUIRE(res.rows.size() == 3);
    for (const auto& row : res.rows) {
        CHECK(row.error.empty());
        // Pure sigma+ pumping: stretched state regardless of the standing wave.
        CHECK(row.populations[2] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("rows that fail keep the scan alive and set the error column") {
    // Atom scanned onto the mirror position: element ordering breaks for
    // exactly one row.
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "custom",
        "scheme": {"j_ground": 1.0, "j_excited": 2.0, "zeta0": 1e-4},
        "elements": [
            {"kind": "atom", "position": 0.0},
            {"kind": "mirror", "position": 1.0, "reflectivity": [-0.5, 0.0]}
        ],
        "inputs": {"b": {"mu": [1.0, 0.0], "nu": [0.0, 0.0]}},
        "x_grid": {"count": 2, "min": 1.0, "max": 2.0, "endpoint": true},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    ScanResult res = run_scan(s);
    REQUIRE(res.rows.size() == 2);
    CHECK_FALSE(res.rows[0].error.empty());
    CHECK(res.rows[1].error.empty());
    CHECK(res.any_error);

    std::ostringstream os;
    write_csv(res, s, os);
    CHECK(os.str().find("strictly increase") != std::string::npos);
}

TEST_CASE("canonical serialization is stable and hashes deterministically") {
    const std::string doc = R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "tau_p": 2.0
    })";
    Scenario a = parse_ok(doc);
    Scenario b = parse_ok(doc);
    CHECK(a.canonical_json() == b.canonical_json());
    CHECK(scenario_hash(a) == scenario_hash(b));

    Scenario c = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "tau_p": 2.5
    })");
    CHECK(scenario_hash(a) != scenario_hash(c));
}

TEST_CASE("SI output scales forces by hbar k") {
    Scenario s = parse_ok(R"({
        "schema_version": 1,
        "configuration": "lin_perp_lin",
        "scheme": {"zeta0": 1e-4},
        "wavenumber": 8.0e6,
        "x_grid": {"count": 1, "min": 0.39269908169872414},
        "v_grid": {"count": 1, "min": 0.0}
    })");
    std::string natural = csv_of(s, 1, Units::Natural);
    std::string si = csv_of(s, 1, Units::Si);
    CHECK(natural.find("units=natural") != std::string::npos);
    CHECK(si.find("units=si") != std::string::npos);
    CHECK(si.find("x_m,v_mps") != std::string::npos);

    // Third line, third column holds the total force.
    auto third_field = [](const std::string& text) {
        std::istringstream is(text);
        std::string line;
        std::getline(is, line);  // comment
        std::getline(is, line);  // header
        std::getline(is, line);
        std::istringstream row(line);
        std::string field;
        for (int i = 0; i < 3; ++i) std::getline(row, field, ',');
        return std::strtod(field.c_str(), nullptr);
    };
    double f_nat = third_field(natural);
    double f_si = third_field(si);
    CHECK(f_si == doctest::Approx(f_nat * 1.054571817e-34 * 8.0e6).epsilon(1e-12));
}
