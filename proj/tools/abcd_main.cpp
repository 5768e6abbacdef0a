#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abcd/analysis.hpp"
#include "abcd/errors.hpp"

namespace {

// Reports, including error objects, go to --output when given, else stdout.
int emit(const std::string& body, const std::string& output) {
    if (output.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << output << "\n";
        return 1;
    }
    out << body;
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw abcd::ParseError("cannot read input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unimodular 2x2 optics toolkit: trace classification, core"
                 " extraction, closed-form powers, cavity and multilayer reports,"
                 " and 4x4 invariance checks."};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = abcd::kDetTol;
    double class_tol = abcd::kClassTol;
    std::string format = "json";
    std::string output;
    app.add_option("--tol", tol,
                   "determinant / invariance tolerance (env ABCD_TOL, flag wins)")
        ->envname("ABCD_TOL");
    app.add_option("--class-tol", class_tol, "half-width of the |trace| = 2 band");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "write the report to this file");

    std::string analyze_file;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full report for a system description file");
    analyze_cmd->add_option("file", analyze_file, "JSON system description")->required();

    std::string power_file;
    long power_n = 1;
    CLI::App* power_cmd =
        app.add_subcommand("power", "closed-form n-th power of the system matrix");
    power_cmd->add_option("file", power_file, "JSON system description")->required();
    power_cmd->add_option("--n", power_n, "exponent (>= 1)")->required();

    double cavity_d = 0.0;
    double cavity_r = 0.0;
    long cavity_n = 0;
    CLI::App* cavity_cmd = app.add_subcommand("cavity", "two-mirror cavity analysis");
    cavity_cmd->add_option("--d", cavity_d, "mirror separation")->required();
    cavity_cmd->add_option("--r", cavity_r, "mirror curvature radius")->required();
    CLI::Option* cavity_n_opt =
        cavity_cmd->add_option("--n", cavity_n, "also report n round trips");

    double delta1 = 0.0;
    double delta2 = 0.0;
    double sigma = 0.0;
    long cycles_n = 0;
    CLI::App* multilayer_cmd =
        app.add_subcommand("multilayer", "periodic two-medium stack analysis");
    multilayer_cmd->add_option("--delta1", delta1, "phase in medium 1 (radians)")
        ->required();
    multilayer_cmd->add_option("--delta2", delta2, "phase in medium 2 (radians)")
        ->required();
    multilayer_cmd->add_option("--sigma", sigma, "boundary rapidity")->required();
    CLI::Option* cycles_opt =
        multilayer_cmd->add_option("--n", cycles_n, "also report n cycles");

    double eta = 0.0;
    double theta = 0.0;
    double mass = 0.0;
    double gauge_gamma = 0.0;
    double momentum_p = 0.0;
    CLI::App* lorentz_cmd =
        app.add_subcommand("lorentz", "four-momentum invariance checks");
    CLI::Option* eta_opt = lorentz_cmd->add_option("--eta", eta, "boost rapidity");
    CLI::Option* theta_opt = lorentz_cmd->add_option("--theta", theta, "rotation angle");
    CLI::Option* mass_opt = lorentz_cmd->add_option("--mass", mass, "particle mass (> 0)");
    CLI::Option* gamma_opt =
        lorentz_cmd->add_option("--gauge-gamma", gauge_gamma, "gauge parameter");
    CLI::Option* p_opt =
        lorentz_cmd->add_option("--p", momentum_p, "light-like momentum magnitude");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        abcd::AnalysisOptions options;
        options.det_tol = tol;
        options.class_tol = class_tol;

        nlohmann::ordered_json report;
        if (analyze_cmd->parsed()) {
            report = abcd::analyze(abcd::parse_spec(read_file(analyze_file), tol), options);
        } else if (power_cmd->parsed()) {
            options.cycles = power_n;
            report = abcd::analyze(abcd::parse_spec(read_file(power_file), tol), options);
        } else if (cavity_cmd->parsed()) {
            if (cavity_n_opt->count() > 0) {
                options.cycles = cavity_n;
            }
            report = abcd::analyze(abcd::CavitySpec{cavity_d, cavity_r}, options);
        } else if (multilayer_cmd->parsed()) {
            if (cycles_opt->count() > 0) {
                options.cycles = cycles_n;
            }
            report = abcd::analyze(abcd::LayerCycleSpec{delta1, delta2, sigma}, options);
        } else if (lorentz_cmd->parsed()) {
            const bool gauge_mode = gamma_opt->count() > 0 || p_opt->count() > 0;
            const bool massive_mode =
                eta_opt->count() > 0 || theta_opt->count() > 0 || mass_opt->count() > 0;
            if (gauge_mode == massive_mode) {
                throw abcd::ValidationError(
                    "lorentz needs either --eta/--theta/--mass or --gauge-gamma/--p");
            }
            if (gauge_mode) {
                if (gamma_opt->count() == 0 || p_opt->count() == 0) {
                    throw abcd::ValidationError(
                        "gauge mode needs both --gauge-gamma and --p");
                }
                report = abcd::gauge_report(gauge_gamma, momentum_p, tol);
            } else {
                if (eta_opt->count() == 0 || theta_opt->count() == 0 ||
                    mass_opt->count() == 0) {
                    throw abcd::ValidationError(
                        "little-group mode needs --eta, --theta and --mass");
                }
                report = abcd::little_group_report(eta, theta, mass, tol);
            }
        }
        return emit(abcd::render_report(report, format), output);
    } catch (const abcd::Error& e) {
        nlohmann::ordered_json err{
            {"error",
             nlohmann::ordered_json{{"type", e.kind()}, {"message", e.what()}}}};
        emit(abcd::render_report(err, format), output);
        return abcd::is_input_error(e) ? 1 : 2;
    } catch (const std::invalid_argument& e) {
        nlohmann::ordered_json err{
            {"error",
             nlohmann::ordered_json{{"type", "InvalidArgument"}, {"message", e.what()}}}};
        emit(abcd::render_report(err, format), output);
        return 1;
    }
}
