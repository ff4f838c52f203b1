#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polscat/scan.hpp"

namespace {

int run_scan_command(const std::string& scenario_path, const std::string& out_path,
                     const std::string& units_name, int threads) {
    std::ifstream in(scenario_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open scenario file '" << scenario_path << "'\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    polscat::ParseResult parsed = polscat::parse_scenario(buf.str());
    if (!parsed.ok()) {
        std::cerr << "scenario validation failed:\n";
        for (const auto& e : parsed.errors) std::cerr << "  - " << e << "\n";
        return 1;
    }

    polscat::ScanResult result;
    try {
        result = polscat::run_scan(*parsed.scenario, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const polscat::Units units =
        units_name == "si" ? polscat::Units::Si : polscat::Units::Natural;
    if (out_path.empty() || out_path == "-") {
        polscat::write_csv(result, *parsed.scenario, std::cout, units);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return 1;
        }
        polscat::write_csv(result, *parsed.scenario, out, units);
    }

    if (result.any_error) {
        std::size_t bad = 0;
        for (const auto& r : result.rows)
            if (!r.error.empty()) ++bad;
        std::cerr << "warning: " << bad << " of " << result.rows.size()
                  << " rows failed; see the error column\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polscat: polarization-resolved scattering and sub-Doppler force scans"};
    app.require_subcommand(1);

    std::string scenario_path, out_path = "-", format = "csv", units = "natural";
    int threads = 1;

    CLI::App* scan = app.add_subcommand("scan", "Evaluate force and population tables");
    scan->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
    scan->add_option("--out", out_path, "Output path ('-' for stdout)");
    scan->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv"}));
    scan->add_option("--units", units, "Output units")
        ->check(CLI::IsMember({"natural", "si"}));
    scan->add_option("--threads", threads, "Row evaluation threads")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    return run_scan_command(scenario_path, out_path, units, threads);
}
