#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specfilter/common.hpp"

namespace specfilter {

/// Two-column whitespace-separated text table; '#' starts a comment. The
/// first column must be non-decreasing. Used for custom windows, trial
/// states and potentials.
std::vector<std::pair<double, double>> load_table(const std::string& path);

/// One value per line; '#' comments allowed. Used for custom quadrature weights.
std::vector<double> load_column(const std::string& path);

/// Piecewise-linear interpolation of (x, y) pairs, clamped at the ends.
double interpolate(const std::vector<std::pair<double, double>>& table, double x);

}  // namespace specfilter
