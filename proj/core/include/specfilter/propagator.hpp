#pragma once

#include <functional>

#include "specfilter/fourier.hpp"
#include "specfilter/potential.hpp"
#include "specfilter/state.hpp"

namespace specfilter {

/// Second-order split-operator step for i d/dt psi = (p^2/2 + V) psi:
/// half potential kick, momentum-space kinetic kick, half potential kick.
/// Phase tables are precomputed once; step() is const and thread-safe, so a
/// single instance can drive concurrent trajectories.
class Propagator {
  public:
    Propagator(const GridSpec& grid, const PotentialSpec& potential, double dt);

    const GridSpec& grid() const { return grid_; }
    double dt() const { return dt_; }

    StateVector step(const StateVector& s) const;

  private:
    GridSpec grid_;
    double dt_;
    std::vector<cplx> potential_half_phase_;
    std::vector<cplx> kinetic_phase_;
    FourierTransformer transform_;
};

/// Advances s0 by `steps` steps, invoking the callback with (i, state at t_i)
/// for i = 0..steps inclusive; the t=0 state is delivered first so quadrature
/// sums can include their initial term. Returns the final state.
StateVector evolve_trajectory(const Propagator& prop, const StateVector& s0, int steps,
                              const std::function<void(int, const StateVector&)>& callback);

}  // namespace specfilter
