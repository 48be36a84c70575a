#pragma once

#include <string>

#include "cslheat/run_config.hpp"

namespace cslheat {

inline constexpr const char* cslheat_version = "0.1.0";

struct pipeline_result {
    int exit_code = 0;
    std::string report_path;
    std::string error;        // non-empty on failure
};

/// Run the full audit pipeline described by the config: per trap, fit the
/// fraction then the number series, run the energy audit, aggregate, and
/// write report.json plus per-trap model-curve CSVs (and spectra when a
/// simulate block is present). Traps are processed concurrently; all file
/// writes happen serially afterwards. On a stage failure the partial
/// artifacts are kept with a .partial suffix and the exit code is nonzero.
pipeline_result run_pipeline(const run_config& config);

/// Current time as ISO-8601 UTC (the only nondeterministic report field).
std::string iso8601_now();

} // namespace cslheat
