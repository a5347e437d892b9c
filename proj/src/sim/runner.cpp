#include "qosc/sim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "qosc/analytic.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/measures.hpp"

namespace qosc::sim {
namespace {

using nlohmann::json;

std::string suffix(Variant v) { return v == Variant::Complete ? "_j1" : "_j2"; }

// Per-variant series of reduced states and their scalar measures.
struct VariantSeries {
    std::vector<QubitDensityMatrix> rho;
    std::vector<double> purity;
    std::vector<double> concurrence;
    std::vector<double> eof;
};

VariantSeries analytic_series(const RunConfig& cfg, Variant v, std::span<const double> grid) {
    const ModelParams p = cfg.params_for(v);
    const DerivedParams d = derive(validate(p));
    const TransformedAmplitudes ta = transform_amplitudes(cfg.amplitudes, d);
    VariantSeries s;
    s.rho.resize(grid.size());
    s.purity.resize(grid.size());
    s.concurrence.resize(grid.size());
    s.eof.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        s.rho[k] = qubit_density_matrix(grid[k], d, ta, p.gamma);
        s.purity[k] = purity_closed_form(grid[k], d, p.gamma);
        const MeasureReport m = measure(s.rho[k]);
        s.concurrence[k] = m.concurrence;
        s.eof[k] = m.eof;
    });
    return s;
}

VariantSeries oracle_series(const RunConfig& cfg, Variant v, std::span<const double> grid) {
    const ModelParams p = cfg.params_for(v);
    const ValidatedParams vp = validate(p);
    const DerivedParams d = derive(vp);
    const fock::TruncatedSpace space(cfg.oracle.n_max);
    const fock::SectorOperator H = fock::build_hamiltonian(vp, space);
    const fock::FullState s0 = fock::initial_state(cfg.amplitudes, space);

    std::vector<double> full_grid(grid.begin(), grid.end());
    const bool prepend = full_grid.empty() || full_grid.front() != 0.0;
    if (prepend) full_grid.insert(full_grid.begin(), 0.0);

    fock::EvolveOptions opt;
    opt.step = fock::recommended_step(p, d);
    std::vector<QubitDensityMatrix> reduced = fock::evolve_reduced(H, s0, p.gamma, full_grid, opt);
    if (prepend) reduced.erase(reduced.begin());

    VariantSeries s;
    s.rho = std::move(reduced);
    for (const auto& rho : s.rho) {
        const MeasureReport m = measure(rho);
        s.purity.push_back(m.purity);
        s.concurrence.push_back(m.concurrence);
        s.eof.push_back(m.eof);
    }
    return s;
}

void add_columns(Table& table, const RunConfig& cfg, const std::vector<Variant>& variants,
                 const std::vector<VariantSeries>& series, const std::string& prefix) {
    auto scalar = [&](const std::string& output, auto member) {
        if (!cfg.wants(output)) return;
        for (std::size_t i = 0; i < variants.size(); ++i)
            table.add_column(prefix + output + suffix(variants[i])) = series[i].*member;
    };
    scalar("purity", &VariantSeries::purity);
    scalar("eof", &VariantSeries::eof);
    scalar("concurrence", &VariantSeries::concurrence);
    if (!cfg.wants("matrix_elements")) return;
    for (const CoherenceLabel& mn : kIndependentCoherences) {
        const int m = static_cast<int>(mn.m);
        const int n = static_cast<int>(mn.n);
        for (std::size_t i = 0; i < variants.size(); ++i) {
            auto& re = table.add_column(prefix + "re_rho_" + mn.str() + suffix(variants[i]));
            auto& im = table.add_column(prefix + "im_rho_" + mn.str() + suffix(variants[i]));
            for (std::size_t k = 0; k < table.key.size(); ++k) {
                re[k] = series[i].rho[k](m, n).real();
                im[k] = series[i].rho[k](m, n).imag();
            }
        }
    }
}

struct Deviation {
    double max_abs{0.0};
    double rms{0.0};
};

Deviation deviation(const std::vector<double>& a, const std::vector<double>& b) {
    Deviation d;
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double e = std::abs(a[k] - b[k]);
        d.max_abs = std::max(d.max_abs, e);
        sum += e * e;
    }
    d.rms = a.empty() ? 0.0 : std::sqrt(sum / double(a.size()));
    return d;
}

Deviation matrix_deviation(const std::vector<QubitDensityMatrix>& a,
                           const std::vector<QubitDensityMatrix>& b) {
    Deviation d;
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Eigen::Matrix4d err = (a[k] - b[k]).cwiseAbs();
        d.max_abs = std::max(d.max_abs, err.maxCoeff());
        sum += err.cwiseAbs2().sum();
    }
    d.rms = a.empty() ? 0.0 : std::sqrt(sum / double(16 * a.size()));
    return d;
}

json to_json(const Deviation& d) { return {{"max_abs", d.max_abs}, {"rms", d.rms}}; }

} // namespace

std::vector<double> parse_range(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
    if (second == std::string::npos) throw ConfigError("range must be a:b:n, got '" + spec + "'");
    double a = 0.0, b = 0.0;
    long n = 0;
    try {
        a = std::stod(spec.substr(0, first));
        b = std::stod(spec.substr(first + 1, second - first - 1));
        n = std::stol(spec.substr(second + 1));
    } catch (const std::exception&) {
        throw ConfigError("range must be a:b:n, got '" + spec + "'");
    }
    if (n < 1) throw ConfigError("range needs at least one point");
    std::vector<double> out(n);
    for (long k = 0; k < n; ++k) out[k] = n == 1 ? a : (k + 1 == n ? b : a + (b - a) * double(k) / double(n - 1));
    return out;
}

int thread_count() {
    if (const char* env = std::getenv("SIMCTL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string code_version() { return QOSC_VERSION; }
std::string conventions_hash() { return QOSC_CONVENTIONS_SHA256; }

json run_metadata(const RunConfig& cfg, const Table& table) {
    json columns = json::array({table.key_name});
    for (const auto& c : table.columns) columns.push_back(c.first);
    return {{"config", to_json(cfg)},
            {"code_version", code_version()},
            {"conventions_sha256", conventions_hash()},
            {"units", "frequencies and rates in units of omega0, time in units of 1/omega0"},
            {"columns", columns}};
}

Table run_params_table(std::span<const double> lambdas, const ModelParams& base) {
    Table table;
    table.key_name = "lambda";
    table.key.assign(lambdas.begin(), lambdas.end());
    std::vector<DerivedParams> derived[2];
    for (int j = 0; j < 2; ++j) {
        for (double lam : lambdas) {
            ModelParams p = base;
            p.lambda = lam;
            p.variant = j == 0 ? Variant::Complete : Variant::Rwa;
            derived[j].push_back(derive(validate(p)));
        }
    }
    auto add = [&](const std::string& name, double DerivedParams::*field) {
        for (int j = 0; j < 2; ++j) {
            auto& col = table.add_column(name + (j == 0 ? "_j1" : "_j2"));
            for (std::size_t k = 0; k < lambdas.size(); ++k) col[k] = derived[j][k].*field;
        }
    };
    add("omega0_eff", &DerivedParams::omega0_eff);
    add("chi", &DerivedParams::chi);
    add("Omega_plus", &DerivedParams::Omega_plus);
    add("Omega_minus", &DerivedParams::Omega_minus);
    table.metadata = {{"base", {{"omega0", base.omega0}, {"omega", base.omega}, {"g", base.g},
                                {"mu", base.mu}}},
                      {"code_version", code_version()},
                      {"conventions_sha256", conventions_hash()}};
    table.check();
    return table;
}

TimeSeries run_timeseries(const RunConfig& cfg) {
    TimeSeries table;
    table.key = cfg.time_grid();
    std::vector<VariantSeries> analytic;
    for (Variant v : cfg.variants) analytic.push_back(analytic_series(cfg, v, table.key));
    add_columns(table, cfg, cfg.variants, analytic, "");
    if (cfg.oracle.enabled) {
        std::vector<VariantSeries> oracle;
        for (Variant v : cfg.variants) oracle.push_back(oracle_series(cfg, v, table.key));
        add_columns(table, cfg, cfg.variants, oracle, "oracle_");
    }
    table.metadata = run_metadata(cfg, table);
    table.check();
    return table;
}

json run_compare(const RunConfig& cfg) {
    json report;
    report["config"] = to_json(cfg);
    report["tolerance"] = cfg.tolerance;
    report["n_max"] = cfg.oracle.n_max;
    report["code_version"] = code_version();
    try {
        const std::vector<double> grid = cfg.time_grid();
        bool pass = true;
        std::vector<VariantSeries> analytic;
        for (Variant v : cfg.variants) {
            analytic.push_back(analytic_series(cfg, v, grid));
            const VariantSeries oracle = oracle_series(cfg, v, grid);
            const Deviation rho = matrix_deviation(analytic.back().rho, oracle.rho);
            const Deviation pur = deviation(analytic.back().purity, oracle.purity);
            const Deviation ent = deviation(analytic.back().eof, oracle.eof);
            const bool ok = rho.max_abs <= cfg.tolerance && pur.max_abs <= cfg.tolerance &&
                            ent.max_abs <= cfg.tolerance;
            report["variants"][std::string(to_string(v))] = {
                {"rho", to_json(rho)}, {"purity", to_json(pur)}, {"eof", to_json(ent)}, {"pass", ok}};
            pass = pass && ok;
        }
        if (cfg.model.lambda == 0.0 && analytic.size() == 2) {
            const Deviation rho = matrix_deviation(analytic[0].rho, analytic[1].rho);
            const bool ok = rho.max_abs <= 1e-12;
            report["variant_agreement"] = {{"rho", to_json(rho)}, {"tolerance", 1e-12}, {"pass", ok}};
            pass = pass && ok;
        }
        report["status"] = pass ? "pass" : "fail";
    } catch (const CutoffTooSmall& e) {
        report["status"] = "error";
        report["error"] = {{"kind", "CutoffTooSmall"}, {"message", e.what()}};
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = {{"kind", "Error"}, {"message", e.what()}};
    }
    return report;
}

Table run_sweep(std::span<const double> lambdas, const RunConfig& base) {
    Table table;
    table.key_name = "lambda";
    table.key.assign(lambdas.begin(), lambdas.end());
    std::vector<std::vector<double>> min_purity(base.variants.size()), max_eof(base.variants.size()),
        first_half(base.variants.size());
    for (double lam : lambdas) {
        RunConfig cfg = base;
        cfg.model.lambda = lam;
        cfg.oracle.enabled = false;
        cfg.outputs = {"purity", "eof"};
        for (Variant v : cfg.variants) validate(cfg.params_for(v));
        const TimeSeries ts = run_timeseries(cfg);
        for (std::size_t i = 0; i < cfg.variants.size(); ++i) {
            const auto& p = ts.column("purity" + suffix(cfg.variants[i]));
            const auto& e = ts.column("eof" + suffix(cfg.variants[i]));
            min_purity[i].push_back(*std::min_element(p.begin(), p.end()));
            max_eof[i].push_back(*std::max_element(e.begin(), e.end()));
            const auto it = std::find_if(e.begin(), e.end(), [](double x) { return x > 0.5; });
            first_half[i].push_back(it == e.end() ? -1.0 : ts.key[it - e.begin()]);
        }
    }
    for (std::size_t i = 0; i < base.variants.size(); ++i) {
        table.add_column("min_purity" + suffix(base.variants[i])) = min_purity[i];
        table.add_column("max_eof" + suffix(base.variants[i])) = max_eof[i];
        table.add_column("first_eof_half" + suffix(base.variants[i])) = first_half[i];
    }
    table.metadata = run_metadata(base, table);
    table.metadata["lambdas"] = table.key;
    table.check();
    return table;
}

} // namespace qosc::sim
