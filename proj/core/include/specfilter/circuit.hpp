#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "specfilter/filter.hpp"
#include "specfilter/gate.hpp"

namespace specfilter {

/// Simulation state of the filtering circuit. The register holding the
/// (n+2)-qubit state is represented by the two c-qubit branch vectors plus
/// scalar bookkeeping: branch0 carries the unit-norm trial state, branch1
/// the unnormalized partial filter sum, and the physical circuit state is
/// (|0>branch0 + |1>branch1) / N with N^2 = 1 + <branch1|branch1>. The
/// second ancilla is measured inside every gate, so only its outcome
/// probabilities are tracked.
struct DualRegisterState {
    StateVector branch0;
    StateVector branch1;
    double cumulative_success = 1.0;
    std::vector<double> failure_probabilities;

    static DualRegisterState from_trial(const StateVector& trial);

    /// N = sqrt(1 + <branch1|branch1>).
    double normalization() const;
};

enum class RunMode { deterministic, sampled };

struct GateOutcome {
    double p_failure = 0.0;
    bool failed = false;
};

/// Applies one accumulation gate through its factored form: V^dagger mixes
/// the branches, the ancilla rotation scales the c=1 component by s, the
/// ancilla measurement renormalizes (its failure probability is recorded),
/// and U recombines. Net branch action on success: branch0 unchanged,
/// branch1 += B * branch0. In sampled mode the measurement outcome is drawn
/// from `rng`; a failure leaves the state unusable and the caller restarts.
GateOutcome apply_filter_gate(DualRegisterState& state, const GateFactors& factors,
                              RunMode mode, std::mt19937_64* rng = nullptr);

/// One controlled evolution step: advances the trial branch, leaves the
/// accumulated branch untouched (the control acts on c = |0>).
void controlled_evolution(DualRegisterState& state, const Propagator& prop);

struct MonteCarloStats {
    std::uint64_t attempts = 0;          // filtering attempts, including the successful one
    bool completed = false;              // a full-success attempt happened
    int failed_at_step = -1;             // last failure position, -1 if none
    bool final_projection_success = false;  // sampled outcome of the closing measurement
};

struct CircuitReport {
    StateVector post_selected;            // branch1 scaled to unit norm
    double p_rho = 0.0;                   // <acc|acc>/N^2, closing-measurement success
    double p_success = 1.0;               // product of per-gate success probabilities
    double p_total = 0.0;                 // p_rho * p_success
    double success_floor = 0.0;           // worst-case lower bound for p_success
    std::vector<double> failure_probabilities;
    MonteCarloStats stats;                // meaningful in sampled mode
};

/// Carried by restart_budget_error when a sampled run exhausts its attempts.
struct restart_budget_error : error {
    restart_budget_error(const std::string& what, MonteCarloStats partial_stats)
        : error(what), partial(partial_stats) {}
    MonteCarloStats partial;
};

/// Runs the full circuit: gate at t=0, then n_steps times (controlled
/// evolution, gate), then the closing projection onto c = |1>. Deterministic
/// mode follows the success branch everywhere and reports exact
/// probabilities; sampled mode draws every ancilla measurement, restarts
/// from t=0 on failure (up to max_restarts attempts), and samples the
/// closing measurement. The seed fully determines sampled outcomes.
CircuitReport run_circuit(const FilterPlan& plan, RunMode mode, std::uint64_t seed = 0,
                          std::uint64_t max_restarts = 1000, const Propagator* prop = nullptr);

}  // namespace specfilter
