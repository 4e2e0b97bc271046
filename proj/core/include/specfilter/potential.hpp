#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specfilter/common.hpp"
#include "specfilter/grid.hpp"

namespace specfilter {

enum class PotentialKind { harmonic, custom_table };

/// Real scalar potential sampled on the grid, in units of hbar*omega.
struct PotentialSpec {
    PotentialKind kind;
    std::vector<double> values;

    /// V(x) = x^2 / 2.
    static PotentialSpec harmonic(const GridSpec& grid);

    static PotentialSpec from_samples(const GridSpec& grid, std::vector<double> values);

    /// Two-column table (x_fraction in [0,1], V), linearly interpolated onto
    /// the grid. x_fraction 0 maps to the left edge, 1 to the right edge.
    static PotentialSpec from_table(const GridSpec& grid,
                                    const std::vector<std::pair<double, double>>& table);
};

}  // namespace specfilter
