#pragma once

#include <array>

#include "specfilter/common.hpp"

namespace specfilter {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

/// Factorization of the non-unitary accumulation gate
///
///     G(B) = prefactor * [[1, 0], [B, 1]],   prefactor = 1/sqrt(g_plus),
///
/// as G = U diag(1, s) V^dagger with U, V^dagger exactly unitary. The
/// prefactor is chosen so the leading singular value is exactly 1, which is
/// what lets the gate be realized by one ancilla rotation plus a projective
/// measurement. All scalar factors depend only on b = |B|:
///
///     f_pm = b/2 +- sqrt(1 + b^2/4)
///     g_pm = 1 + b^2/2 +- b sqrt(1 + b^2/4)      (note f_pm^2 = g_pm)
///     s    = sqrt(g_minus / g_plus)
///
/// A complex B is handled by G(B) = D G(|B|) D^dagger with D = diag(1,
/// e^{i arg B}); D is absorbed into U and D^dagger into V^dagger.
struct GateFactors {
    cplx b;              // the raw coefficient
    double magnitude;    // |B|
    double phase;        // arg B (0 when |B| = 0)
    double prefactor;    // leading normalization, 1/sqrt(g_plus)
    double singular;     // second singular value s in (0, 1]
    double theta;        // ancilla rotation angle, cos(theta) = s
    double f_plus, f_minus;
    double g_plus, g_minus;
    Mat2 u;              // left unitary
    Mat2 v_dagger;       // right unitary
};

/// Requires |B| <= 1 (the filter guarantees |B| <= 1/n_steps).
GateFactors gate_factors(cplx b);

/// Worst-case single-measurement weight of the rotated c=1 component,
/// max over partial-sum norms of <Psi_1|Psi_1>/N^2 = 1/(1 + f_minus^2).
double p1_bound(cplx b);

/// Lower bound on the probability that all n_steps+1 gate measurements
/// succeed, evaluated at the worst case |B| = 1/n_steps for every step.
double worst_case_success_floor(int n_steps);

/// Large-step form of the same floor: (1 - 1/n_steps)/e.
double success_floor_asymptotic(int n_steps);

}  // namespace specfilter
