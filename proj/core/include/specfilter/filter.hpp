#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specfilter/oracle.hpp"
#include "specfilter/propagator.hpp"
#include "specfilter/quadrature.hpp"
#include "specfilter/window.hpp"

namespace specfilter {

enum class TrialKind { cos2, custom_table, samples };

/// Recipe for the initial trial state. The realized state is always
/// normalized to 1 on the grid.
struct TrialSpec {
    TrialKind kind = TrialKind::cos2;
    double width = 1.0;                                // cos2 half-width
    std::vector<std::pair<double, double>> table;      // (x_fraction, value)
    std::vector<cplx> values;                          // direct samples

    /// cos^2(pi x / (2 width)) on [-width, width], zero outside.
    static TrialSpec cos2(double width);
    static TrialSpec from_table(std::vector<std::pair<double, double>> table);
    static TrialSpec from_samples(std::vector<cplx> values);

    StateVector realize(const GridSpec& grid) const;
};

/// Complete description of one filtering run.
struct FilterPlan {
    GridSpec grid;
    PotentialSpec potential;
    StateVector trial;          // normalized
    Window window;
    QuadratureRule quadrature;
    double target_energy;       // center of the filter pass band
    double total_time;
    int n_steps;

    double dt() const { return total_time / n_steps; }
};

/// Validates sizes and invariants (window/weights on n_steps+1 nodes,
/// normalized trial, max coefficient magnitude 1/n_steps).
FilterPlan make_filter_plan(GridSpec grid, PotentialSpec potential, StateVector trial,
                            Window window, QuadratureRule quadrature, double target_energy,
                            double total_time, int n_steps);

/// Coefficient of the node-i term: u_i w(t_i) e^{i E t_i} / n_steps.
cplx filter_coefficient(const FilterPlan& plan, int i);

struct FilterResult {
    StateVector accumulated;   // raw sum, unnormalized
    StateVector filtered;      // accumulated scaled to unit norm
    double norm2;              // <acc|acc>, the pre-measurement weight
};

/// Reference implementation of the filter: one trajectory pass accumulating
/// sum_i B_i |psi(t_i)>. An existing propagator with matching grid/dt may be
/// supplied to avoid replanning.
FilterResult classical_filter(const FilterPlan& plan, const Propagator* prop = nullptr);

/// Projections <phi_m|trial> onto the oracle eigenstates.
std::vector<cplx> mode_amplitudes(const StateVector& trial, const EigenSolution& eig);

}  // namespace specfilter
