// config.hpp — run configuration, presets and override handling for simctl.
//
// A run is described by one JSON object. Unknown keys are rejected. All
// frequencies and rates are in units of the qubit frequency omega0.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/analytic.hpp"
#include "qosc/model.hpp"

namespace qosc::sim {

struct OracleConfig {
    bool enabled{false};
    int n_max{16};
};

struct RunConfig {
    std::string name{"run"};
    std::optional<std::string> preset;
    ModelParams model;  // `variant` is ignored; see `variants`
    std::vector<Variant> variants{Variant::Complete, Variant::Rwa};
    ModeAmplitudes amplitudes;
    double t_start{0.0};
    double t_end{100.0};
    int n_points{201};
    std::vector<std::string> outputs{"purity", "eof"};
    OracleConfig oracle;
    double tolerance{5e-3};  // analytic-vs-oracle bound used by compare

    ModelParams params_for(Variant v) const;
    std::vector<double> time_grid() const;
    bool wants(const std::string& output) const;
};

// Parses one fully resolved JSON object. Throws ConfigError on unknown keys,
// wrong types or violated invariants, and the model errors from validate().
RunConfig parse_config(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& cfg);

// Applies "key=value" overrides; dotted keys address nested objects and the
// value is read as JSON when it parses, as a string otherwise.
void apply_overrides(nlohmann::json& doc, const std::vector<std::string>& overrides);

std::vector<std::string> preset_names();
// JSON objects of every panel in a preset ("fig3" expands to its three panels).
std::vector<nlohmann::json> preset_panels(const std::string& name);

// Expands doc["preset"] (if any), layers the remaining keys of `doc` and the
// overrides on top of each panel, then parses.
std::vector<RunConfig> resolve(const nlohmann::json& doc, const std::vector<std::string>& overrides);

} // namespace qosc::sim
