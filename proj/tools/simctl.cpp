// simctl — command-line front end for the qubit-oscillator model.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qosc/errors.hpp"
#include "qosc/sim/config.hpp"
#include "qosc/sim/runner.hpp"
#include "qosc/sim/series.hpp"

namespace {

using nlohmann::json;
namespace sim = qosc::sim;

constexpr const char* kUnits =
    "All frequencies and rates (omega0, omega, g, lambda, gamma) are in units of omega0; "
    "times are in units of 1/omega0.";

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qosc::ConfigError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw qosc::ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<sim::RunConfig> load_configs(const std::string& config, const std::string& preset,
                                         const std::vector<std::string>& overrides) {
    json doc = config.empty() ? json::object() : read_json_file(config);
    if (!preset.empty()) doc["preset"] = preset;
    return sim::resolve(doc, overrides);
}

void write_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw qosc::Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("Two qubit-oscillator subsystems with oscillator coupling.\n") + kUnits};
    app.require_subcommand(1);

    std::string lambda_range = "0:0.49:50";
    double omega0 = 1.0, omega = 1.0, g = 0.025, mu = 1.0;
    std::string out_path;
    auto* params = app.add_subcommand("params", "Diagonal-frame constants of both variants versus lambda");
    params->add_option("--lambda", lambda_range, "lambda grid a:b:n")->capture_default_str();
    params->add_option("--omega0", omega0)->capture_default_str();
    params->add_option("--omega", omega)->capture_default_str();
    params->add_option("--g", g)->capture_default_str();
    params->add_option("--mu", mu)->capture_default_str();
    params->add_option("--out", out_path, "CSV path (stdout when omitted)");
    params->footer(kUnits);

    std::string config, preset, out_dir = ".";
    std::vector<std::string> overrides;
    auto add_run_options = [&](CLI::App* cmd) {
        auto* c = cmd->add_option("--config", config, "JSON run configuration");
        auto* p = cmd->add_option("--preset", preset, "named preset (see `simctl presets`)");
        c->excludes(p);
        cmd->add_option("--override", overrides, "key=value applied after the preset; dotted keys nest");
        cmd->footer(kUnits);
    };

    auto* evolve = app.add_subcommand("evolve", "Write time series CSV and metadata for each panel");
    add_run_options(evolve);
    evolve->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

    std::string report_path;
    auto* compare = app.add_subcommand("compare", "Analytic versus truncated-Fock comparison report");
    add_run_options(compare);
    compare->add_option("--report", report_path, "report JSON path (stdout when omitted)");

    std::string sweep_range;
    auto* sweep = app.add_subcommand("sweep", "Summary statistics of the time series versus lambda");
    add_run_options(sweep);
    sweep->add_option("--lambda", sweep_range, "lambda grid a:b:n")->required();
    sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");

    auto* presets = app.add_subcommand("presets", "List preset names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*params) {
            qosc::ModelParams base;
            base.omega0 = omega0;
            base.omega = omega;
            base.g = g;
            base.mu = mu;
            const auto lambdas = sim::parse_range(lambda_range);
            const sim::Table table = sim::run_params_table(lambdas, base);
            if (out_path.empty()) {
                sim::write_csv(std::cout, table);
            } else {
                const std::filesystem::path p(out_path);
                const std::string dir = p.has_parent_path() ? p.parent_path().string() : ".";
                sim::write_table_files(table, dir, p.stem().string());
            }
            return 0;
        }
        if (*presets) {
            for (const auto& name : sim::preset_names()) std::cout << name << '\n';
            return 0;
        }
        if (config.empty() && preset.empty())
            throw qosc::ConfigError("one of --config or --preset is required");
        const auto configs = load_configs(config, preset, overrides);
        if (*evolve) {
            std::filesystem::create_directories(out_dir);
            for (const auto& cfg : configs) {
                const sim::TimeSeries ts = sim::run_timeseries(cfg);
                sim::write_table_files(ts, out_dir, cfg.name);
                std::cerr << "wrote " << (std::filesystem::path(out_dir) / (cfg.name + ".csv")).string() << '\n';
            }
            return 0;
        }
        if (*compare) {
            json reports = json::array();
            bool pass = true;
            for (const auto& cfg : configs) {
                json r = sim::run_compare(cfg);
                pass = pass && r["status"] == "pass";
                reports.push_back(std::move(r));
            }
            write_json(reports.size() == 1 ? reports[0] : json{{"status", pass ? "pass" : "fail"}, {"runs", reports}},
                       report_path);
            return pass ? 0 : 1;
        }
        if (*sweep) {
            if (configs.size() != 1) throw qosc::ConfigError("sweep needs a single-panel configuration");
            const auto lambdas = sim::parse_range(sweep_range);
            const sim::Table table = sim::run_sweep(lambdas, configs.front());
            if (out_path.empty()) {
                sim::write_csv(std::cout, table);
            } else {
                const std::filesystem::path p(out_path);
                const std::string dir = p.has_parent_path() ? p.parent_path().string() : ".";
                sim::write_table_files(table, dir, p.stem().string());
            }
            return 0;
        }
    } catch (const qosc::Error& e) {
        std::cerr << "simctl: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "simctl: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
