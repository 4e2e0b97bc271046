#pragma once

#include <vector>

#include "specfilter/common.hpp"
#include "specfilter/grid.hpp"

namespace specfilter {

/// Complex amplitudes on a GridSpec. All norms carry the grid measure dx,
/// so refinement leaves the norm of a physical state unchanged.
struct StateVector {
    GridSpec grid;
    std::vector<cplx> amplitudes;

    StateVector(GridSpec g, std::vector<cplx> amps);

    /// Zero state on `g`.
    static StateVector zero(const GridSpec& g);
};

/// Grid quadrature <a|b> = sum conj(a_j) b_j dx. Conjugate-symmetric.
cplx inner_product(const StateVector& a, const StateVector& b);

double norm2(const StateVector& s);
double norm(const StateVector& s);

/// Returns s scaled to unit norm. Throws numerical_error on a zero state.
StateVector normalized(const StateVector& s);

bool is_normalized(const StateVector& s, double tol = 1e-12);

/// ||a - b||^2 in the grid norm.
double distance2(const StateVector& a, const StateVector& b);

/// min over theta of ||e^{i theta} a - b||^2 = ||a||^2 + ||b||^2 - 2|<a|b>|.
double aligned_distance2(const StateVector& a, const StateVector& b);

void require_same_grid(const StateVector& a, const StateVector& b);

}  // namespace specfilter
