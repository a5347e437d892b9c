// runner.hpp — operations behind the simctl subcommands.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/sim/config.hpp"
#include "qosc/sim/series.hpp"

namespace qosc::sim {

// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_range(const std::string& spec);

// Worker count: SIMCTL_THREADS if set and positive, else the hardware count.
int thread_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

std::string code_version();
std::string conventions_hash();
nlohmann::json run_metadata(const RunConfig& cfg, const Table& table);

// Diagonal-frame constants of both variants versus lambda. A lambda outside
// the stable range of either variant raises StabilityError naming it.
Table run_params_table(std::span<const double> lambdas, const ModelParams& base);

TimeSeries run_timeseries(const RunConfig& cfg);

// Analytic versus truncated-Fock comparison. Never throws for model or
// cutoff problems; those are reported with status "error".
nlohmann::json run_compare(const RunConfig& cfg);

// One row per lambda with summary statistics of the time series.
Table run_sweep(std::span<const double> lambdas, const RunConfig& base);

} // namespace qosc::sim
