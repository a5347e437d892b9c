// Panels of the reference figures. Common to all: omega0 = omega = 1,
// g = 0.025, mu = 1.

#include <map>
#include <sstream>

#include "qosc/errors.hpp"
#include "qosc/sim/config.hpp"

namespace qosc::sim {
namespace {

using nlohmann::json;

json base(const std::string& name) {
    return {{"name", name}, {"preset", name}, {"omega0", 1.0}, {"omega", 1.0},
            {"g", 0.025},   {"mu", 1.0}};
}

std::string tag(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

json purity_panel(double lambda) {
    json p = base("fig3-lam" + tag(lambda));
    p["lambda"] = lambda;
    p["gamma"] = 5e-5;
    p["alpha"] = {0.5, 0.0};
    p["beta"] = {0.5, 0.0};
    p["t_start"] = 0.0;
    p["t_end"] = 300.0;
    p["n_points"] = 600;
    p["outputs"] = {"purity", "eof"};
    return p;
}

json long_eof_panel(double lambda, double gamma) {
    json p = base("fig4-lam" + tag(lambda) + "-gamma" + tag(gamma));
    p["lambda"] = lambda;
    p["gamma"] = gamma;
    p["alpha"] = {2.0, 0.0};
    p["beta"] = {2.0, 0.0};
    p["t_start"] = 0.0;
    p["t_end"] = 25000.0;
    p["n_points"] = 50001;
    p["outputs"] = {"eof", "purity"};
    return p;
}

json short_eof_panel(double lambda) {
    json p = base("fig5-lam" + tag(lambda));
    p["lambda"] = lambda;
    p["gamma"] = 5e-5;
    p["alpha"] = {2.0, 0.0};
    p["beta"] = {2.0, 0.0};
    p["t_start"] = 0.0;
    p["t_end"] = 50.0;
    p["n_points"] = 1001;
    p["outputs"] = {"eof", "purity"};
    return p;
}

json oracle_panel() {
    json p = purity_panel(0.05);
    p["name"] = p["preset"] = "oracle-fig3";
    p["outputs"] = {"purity", "eof", "matrix_elements"};
    p["oracle"] = {{"enabled", true}, {"n_max", 16}};
    p["tolerance"] = 5e-3;
    return p;
}

const std::map<std::string, std::vector<json>>& registry() {
    static const std::map<std::string, std::vector<json>> presets = [] {
        std::map<std::string, std::vector<json>> m;
        const std::vector<double> lambdas{0.05, 0.25, 0.48};
        for (double lam : lambdas) {
            json p3 = purity_panel(lam);
            m[p3["name"].get<std::string>()] = {p3};
            m["fig3"].push_back(p3);
            json p5 = short_eof_panel(lam);
            m[p5["name"].get<std::string>()] = {p5};
            m["fig5"].push_back(p5);
        }
        for (double gamma : {0.0, 5e-5})
            for (double lam : lambdas) {
                json p4 = long_eof_panel(lam, gamma);
                m[p4["name"].get<std::string>()] = {p4};
                m["fig4"].push_back(p4);
            }
        m["oracle-fig3"] = {oracle_panel()};
        return m;
    }();
    return presets;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

std::vector<json> preset_panels(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw ConfigError("unknown preset '" + name + "'");
    return it->second;
}

} // namespace qosc::sim
