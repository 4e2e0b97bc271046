#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specfilter/common.hpp"
#include "specfilter/quadrature.hpp"

namespace specfilter {

enum class WindowKind { rectangular, hann, custom_table };

/// Apodization window sampled on the n_steps+1 uniform time nodes t_i = i*dt
/// of a run. Values lie in [0,1]; custom tables must reach 1 somewhere.
struct Window {
    WindowKind kind;
    std::vector<double> samples;  // size n_steps + 1

    int node_count() const { return static_cast<int>(samples.size()); }
    int n_steps() const { return node_count() - 1; }

    static Window rectangular(int n_steps);

    /// w(t_i) = (1 - cos(2 pi i / n_steps)) / 2.
    static Window hann(int n_steps);

    /// Two-column table (t_fraction in [0,1], w in [0,1]), linearly
    /// interpolated onto the nodes.
    static Window from_table(const std::vector<std::pair<double, double>>& table, int n_steps);

    static Window from_samples(std::vector<double> samples);
};

/// Window value at node i; throws std::out_of_range outside [0, n_steps].
double window_value(const Window& w, int i);

/// Quadrature line shape L(dE) = (1/n) sum_i u_i w(t_i) e^{i dE t_i}.
/// Evaluated with the same rule the filter uses, so filtered mode amplitudes
/// are exactly a_m * L(E_target - E_m) under ideal evolution.
cplx line_shape(const Window& w, double total_time, double energy_offset,
                const QuadratureRule& rule);
cplx line_shape(const Window& w, double total_time, double energy_offset);

/// Retention of the targeted mode: |L(0)|.
double coherent_gain(const Window& w, const QuadratureRule& rule);
double coherent_gain(const Window& w);

/// Line-shape survey over positive energy offsets up to the bandwidth edge
/// pi/dt, computed from a zero-padded transform of the weighted samples.
struct LineShapeReport {
    double gain;                        // |L(0)|
    double lobe_width;                  // offset of first |L| minimum, in units of pi/T
    double suppression;                 // max |L| over the exclusion band
    double exclusion;                   // band edge used for `suppression`
    std::vector<double> offsets;        // scan grid (ascending, >= 0)
    std::vector<double> magnitudes;     // |L| on the scan grid

    /// Suppression relative to the gain, in dB: 20 log10(S / |L(0)|).
    double suppression_db() const;
};

LineShapeReport measure_line_shape(const Window& w, double total_time,
                                   const QuadratureRule& rule, double exclusion,
                                   int oversample = 32);

/// Max |L| over offsets >= exclusion. The exclusion must clear the main
/// lobe (first |L| minimum); otherwise invalid_band_error is thrown.
double suppression_factor(const Window& w, double total_time, double exclusion,
                          const QuadratureRule& rule);
double suppression_factor(const Window& w, double total_time, double exclusion);

/// Offset of the first local minimum of |L| in units of pi/T.
double main_lobe_width(const Window& w, double total_time, const QuadratureRule& rule);

}  // namespace specfilter
