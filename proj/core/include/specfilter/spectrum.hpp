#pragma once

#include <vector>

#include "specfilter/propagator.hpp"
#include "specfilter/quadrature.hpp"
#include "specfilter/window.hpp"

namespace specfilter {

enum class AutocorrMode { direct_overlap, circuit_emulated };

/// Overlap series c(t_i) = <psi(0)|psi(t_i)> along one trajectory.
struct AutocorrSeries {
    std::vector<double> times;
    std::vector<cplx> values;
    AutocorrMode provenance;
};

/// Direct mode evaluates the overlaps; circuit mode emulates the one-ancilla
/// interferometer exactly: the register is doubled into the entangled pair
/// (|0> psi(0) + |1> psi(t))/sqrt(2) and c(t) is reconstructed from the
/// Pauli expectations <sigma_x (x) I> and <sigma_y (x) I> of that state.
/// With this normalization the expectations equal Re and Im of the overlap
/// directly (no factor 2); the direct mode pins the constant. Both modes are
/// exact expectation values (no shot noise) and agree to round-off.
AutocorrSeries autocorrelation(const Propagator& prop, const StateVector& s0, int n_steps,
                               AutocorrMode mode = AutocorrMode::direct_overlap);

/// Windowed transform of the autocorrelation on an energy grid covering the
/// full bandwidth [-pi/dt, pi/dt).
struct SpectrumSeries {
    std::vector<double> energies;  // ascending
    std::vector<cplx> values;
    double total_time = 0.0;
};

/// C(E) = (1/n) sum_i u_i w(t_i) e^{i E t_i} c(t_i), evaluated by a
/// zero-padded transform (default 4x padding refines the energy grid
/// without changing the physics).
SpectrumSeries power_spectrum(const AutocorrSeries& ac, const Window& window,
                              const QuadratureRule& rule, int padding = 4);
SpectrumSeries power_spectrum(const AutocorrSeries& ac, const Window& window, int padding = 4);

struct SpectralPeak {
    double energy;
    double height;  // |C| at the refined peak
};

/// Interior local maxima of |C(E)| at or above threshold * max|C|, refined
/// by 3-point parabolic interpolation, ascending in energy.
/// threshold must lie in (0, 1].
std::vector<SpectralPeak> detect_peaks(const SpectrumSeries& sp, double threshold);

/// Value of |C| at the grid energy nearest E.
double spectrum_magnitude_at(const SpectrumSeries& sp, double energy);

}  // namespace specfilter
