#include "qosc/sim/config.hpp"

#include <algorithm>
#include <set>

#include "qosc/errors.hpp"

namespace qosc::sim {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys{"name",    "preset",  "omega0",  "omega",     "g",
                                  "lambda",  "mu",      "gamma",   "variants",  "alpha",
                                  "beta",    "t_start", "t_end",   "n_points",  "outputs",
                                  "oracle",  "tolerance"};
const std::set<std::string> kOracleKeys{"enabled", "n_max"};
const std::set<std::string> kOutputs{"purity", "eof", "concurrence", "matrix_elements"};

double number(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
    return doc[key].get<double>();
}

cplx complex_value(const json& doc, const char* key) {
    if (!doc.contains(key)) return 0.0;
    const json& v = doc[key];
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ConfigError(std::string("'") + key + "' must be a number or [re, im]");
}

Variant parse_variant(const json& v) {
    if (v == "complete" || v == 1) return Variant::Complete;
    if (v == "rwa" || v == 2) return Variant::Rwa;
    throw ConfigError("unknown variant " + v.dump() + " (expected \"complete\" or \"rwa\")");
}

json parse_value(const std::string& text) {
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded()) return text;
    return v;
}

} // namespace

ModelParams RunConfig::params_for(Variant v) const {
    ModelParams p = model;
    p.variant = v;
    return p;
}

std::vector<double> RunConfig::time_grid() const {
    std::vector<double> t(n_points);
    for (int k = 0; k < n_points; ++k)
        t[k] = k + 1 == n_points ? t_end : t_start + (t_end - t_start) * double(k) / (n_points - 1);
    if (n_points == 1) t[0] = t_start;
    return t;
}

bool RunConfig::wants(const std::string& output) const {
    return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (!kKeys.count(key)) throw ConfigError("unknown configuration key '" + key + "'");

    RunConfig cfg;
    if (doc.contains("name")) cfg.name = doc["name"].get<std::string>();
    if (doc.contains("preset") && doc["preset"].is_string()) cfg.preset = doc["preset"].get<std::string>();
    cfg.model.omega0 = number(doc, "omega0", cfg.model.omega0);
    cfg.model.omega = number(doc, "omega", cfg.model.omega);
    cfg.model.g = number(doc, "g", cfg.model.g);
    cfg.model.lambda = number(doc, "lambda", cfg.model.lambda);
    cfg.model.mu = number(doc, "mu", cfg.model.mu);
    cfg.model.gamma = number(doc, "gamma", cfg.model.gamma);
    cfg.amplitudes.alpha = complex_value(doc, "alpha");
    cfg.amplitudes.beta = complex_value(doc, "beta");
    cfg.t_start = number(doc, "t_start", cfg.t_start);
    cfg.t_end = number(doc, "t_end", cfg.t_end);
    cfg.tolerance = number(doc, "tolerance", cfg.tolerance);

    if (doc.contains("n_points")) {
        if (!doc["n_points"].is_number_integer()) throw ConfigError("'n_points' must be an integer");
        cfg.n_points = doc["n_points"].get<int>();
    }
    if (doc.contains("variants")) {
        const json& v = doc["variants"];
        if (!v.is_array() || v.empty()) throw ConfigError("'variants' must be a non-empty array");
        cfg.variants.clear();
        for (const json& item : v) cfg.variants.push_back(parse_variant(item));
    }
    if (doc.contains("outputs")) {
        const json& v = doc["outputs"];
        if (!v.is_array()) throw ConfigError("'outputs' must be an array");
        cfg.outputs.clear();
        for (const json& item : v) {
            if (!item.is_string() || !kOutputs.count(item.get<std::string>()))
                throw ConfigError("unknown output " + item.dump());
            cfg.outputs.push_back(item.get<std::string>());
        }
    }
    if (doc.contains("oracle")) {
        const json& o = doc["oracle"];
        if (!o.is_object()) throw ConfigError("'oracle' must be an object");
        for (const auto& [key, _] : o.items())
            if (!kOracleKeys.count(key)) throw ConfigError("unknown oracle key '" + key + "'");
        if (o.contains("enabled")) cfg.oracle.enabled = o["enabled"].get<bool>();
        if (o.contains("n_max")) cfg.oracle.n_max = o["n_max"].get<int>();
    }

    if (cfg.n_points < 1) throw ConfigError("'n_points' must be positive");
    if (cfg.n_points >= 2 && !(cfg.t_end > cfg.t_start))
        throw ConfigError("'t_end' must exceed 't_start'");
    if (cfg.t_start < 0.0) throw ConfigError("'t_start' must be non-negative");
    if (!(cfg.tolerance > 0.0)) throw ConfigError("'tolerance' must be positive");
    for (Variant v : cfg.variants) validate(cfg.params_for(v));
    return cfg;
}

json to_json(const RunConfig& cfg) {
    json doc;
    doc["name"] = cfg.name;
    if (cfg.preset) doc["preset"] = *cfg.preset;
    doc["omega0"] = cfg.model.omega0;
    doc["omega"] = cfg.model.omega;
    doc["g"] = cfg.model.g;
    doc["lambda"] = cfg.model.lambda;
    doc["mu"] = cfg.model.mu;
    doc["gamma"] = cfg.model.gamma;
    json variants = json::array();
    for (Variant v : cfg.variants) variants.push_back(std::string(to_string(v)));
    doc["variants"] = variants;
    doc["alpha"] = {cfg.amplitudes.alpha.real(), cfg.amplitudes.alpha.imag()};
    doc["beta"] = {cfg.amplitudes.beta.real(), cfg.amplitudes.beta.imag()};
    doc["t_start"] = cfg.t_start;
    doc["t_end"] = cfg.t_end;
    doc["n_points"] = cfg.n_points;
    doc["outputs"] = cfg.outputs;
    doc["oracle"] = {{"enabled", cfg.oracle.enabled}, {"n_max", cfg.oracle.n_max}};
    doc["tolerance"] = cfg.tolerance;
    return doc;
}

void apply_overrides(json& doc, const std::vector<std::string>& overrides) {
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("override must be key=value: " + item);
        const std::string key = item.substr(0, eq);
        json* target = &doc;
        std::size_t start = 0;
        for (std::size_t dot = key.find('.'); dot != std::string::npos; dot = key.find('.', start)) {
            target = &(*target)[key.substr(start, dot - start)];
            if (!target->is_object() && !target->is_null())
                throw ConfigError("override path is not an object: " + key);
            start = dot + 1;
        }
        (*target)[key.substr(start)] = parse_value(item.substr(eq + 1));
    }
}

std::vector<RunConfig> resolve(const json& doc, const std::vector<std::string>& overrides) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    std::vector<json> panels{json::object()};
    if (doc.contains("preset")) {
        if (!doc["preset"].is_string()) throw ConfigError("'preset' must be a string");
        panels = preset_panels(doc["preset"].get<std::string>());
    }
    std::vector<RunConfig> out;
    for (json panel : panels) {
        for (const auto& [key, value] : doc.items())
            if (key != "preset") panel[key] = value;
        apply_overrides(panel, overrides);
        out.push_back(parse_config(panel));
    }
    return out;
}

} // namespace qosc::sim
