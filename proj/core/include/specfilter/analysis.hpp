#pragma once

#include <vector>

#include "specfilter/oracle.hpp"
#include "specfilter/potential.hpp"
#include "specfilter/state.hpp"

namespace specfilter {

/// Scalar inputs for the closed-form estimators.
struct AnalysisInputs {
    double suppression = 0.0;     // S, max line-shape magnitude outside the band
    double overlap = 0.0;         // A = |<target|trial>|^2
    double gain = 1.0;            // |L(0)|
    double lobe_width = 1.0;      // W, main-lobe width in units of pi/T
    double bandwidth = 0.0;       // 2*pi/dt
    double gap = 0.0;             // nearest populated-neighbor energy spacing
    double evolution_constant = 0.0;  // C in the fitted error model C * n^-q
    double scheme_order = 2.0;        // q
    double target_accuracy = 1e-8;    // requested error level
};

/// Residual contamination of the filtered state when the suppression does
/// the limiting: S^2 (1 - A) / (A |L(0)|^2). Throws on A = 0.
double filtering_error_bound(double suppression, double overlap, double gain);

/// Error bound combining time discretization and filtering:
/// max(C n^-q, filtering_error_bound).
double total_error_bound(const AnalysisInputs& in, int n_steps);

/// Closing-measurement success estimate A|L(0)|^2 / (1 + A|L(0)|^2), in [0, 1/2].
double eigenstate_probability(double overlap, double gain);

/// Smallest step count exceeding max(W*bandwidth/(2*gap), (C/eps)^(1/q)).
/// Throws degenerate_spectrum_error when the gap vanishes.
long long minimum_time_steps(double lobe_width, double bandwidth, double gap,
                             double evolution_constant, double target_accuracy,
                             double scheme_order);

/// Resource/accuracy ratios against the phase-estimation baseline, which
/// filters with a rectangular window and succeeds with probability A.
struct ComparisonReport {
    double filtering_error;    // the bound above for these inputs
    double p_rho_estimate;     // eigenstate_probability
    double cost_ratio_bound;   // ours/baseline operations: 2e/|L0|^2 * (n/n_alt)
    double accuracy_ratio;     // ours/baseline error: S^2/(S_rect^2 |L0|^2)
};

ComparisonReport alt_comparison(const AnalysisInputs& in, long long n_steps,
                                long long n_steps_alt, double suppression_rect);

/// Power-law fit err = C * n^-q of the measured propagation error of a
/// stationary state over [0, T] against the known eigenphase, sampled at
/// the given step counts. Returns {C, q}.
struct EvolutionErrorFit {
    double constant;  // C
    double order;     // q
    std::vector<double> errors;  // one per step count, grid norm
};

EvolutionErrorFit fit_evolution_error(const GridSpec& grid, const PotentialSpec& potential,
                                      const StateVector& eigenstate, double energy,
                                      double total_time, const std::vector<int>& step_counts);

}  // namespace specfilter
