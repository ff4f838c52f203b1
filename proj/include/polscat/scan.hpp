#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "polscat/scenario.hpp"

namespace polscat {

enum class Units { Natural, Si };

/// One (x, v) grid point. kx and v are the grid values; forces are in
/// hbar k flux units. Rows that failed carry the message in `error` and
/// zeroed numeric fields.
struct ScanRow {
    double kx = 0.0;
    double v = 0.0;
    double force_total = 0.0;
    double force_position = 0.0;
    double force_friction = 0.0;
    std::vector<double> populations;
    Complex coherence{0.0, 0.0};  // <+j|rho|-j>
    std::string error;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::uint64_t scenario_hash = 0;
    int population_count = 0;
    bool any_error = false;
};

/// Evaluate every (x, v) grid point, x-major. Rows are independent; with
/// threads > 1 they are computed in parallel and assembled in order, so the
/// output is identical for any thread count. Per-row solver failures are
/// recorded in the row instead of aborting the scan.
ScanResult run_scan(const Scenario& scenario, int threads = 1);

/// FNV-1a over the canonical scenario serialization.
std::uint64_t scenario_hash(const Scenario& scenario);

/// CSV with a leading comment line carrying the scenario hash, then a header
/// row. Numeric fields use 17 significant digits so values round-trip
/// bit-exactly.
void write_csv(const ScanResult& result, const Scenario& scenario, std::ostream& os,
               Units units = Units::Natural);

std::string format_double(double value);

}  // namespace polscat
