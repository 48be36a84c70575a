#pragma once

#include <string>

#include "cslheat/fitting.hpp"

namespace cslheat {

/// Parse a decay CSV: UTF-8, header `t_s,value` or `t_s,value,sigma`,
/// at least two data rows, strictly increasing times. Malformed rows and
/// monotonicity violations raise std::runtime_error naming the line.
decay_series ingest_series(const std::string& path, series_kind kind);

/// Write two or three columns with the same header convention.
void write_series_csv(const std::string& path, const decay_series& series);

} // namespace cslheat
