#pragma once

#include <vector>

#include "specfilter/potential.hpp"
#include "specfilter/state.hpp"

namespace specfilter {

/// Lowest eigenpairs of H = p^2/2 + V, energies ascending, states
/// orthonormal in the grid norm. Eigenvector phases are fixed by making the
/// largest-magnitude amplitude real and positive.
struct EigenSolution {
    std::vector<double> energies;
    std::vector<StateVector> states;
};

/// Dense diagonalization of the grid Hamiltonian. The kinetic term uses the
/// same spectral (DFT-based) representation as the propagator, so eigenpairs
/// returned here are exact fixed points of the discretized dynamics.
EigenSolution diagonalize_hamiltonian(const GridSpec& grid, const PotentialSpec& potential,
                                      int count);

/// Nearest-neighbor gap around `target_energy` among modes whose relative
/// weight |a_m|^2 / max|a|^2 exceeds `weight_threshold`. Used to place the
/// suppression exclusion band. Throws degenerate_spectrum_error when no
/// distinct populated neighbor exists.
double populated_gap(const EigenSolution& eig, const std::vector<cplx>& amplitudes,
                     double target_energy, double weight_threshold = 1e-8);

}  // namespace specfilter
