#pragma once

#include <string>
#include <vector>

#include "specfilter/common.hpp"

namespace specfilter {

/// Weights u_i turning the filtering integral over [0,T] into the node sum
/// (1/n) sum_i u_i f(t_i). Weights lie in [0,1] and sum to n_steps, so a
/// constant integrand is reproduced exactly and no single term can exceed
/// 1/n in the filter coefficients.
struct QuadratureRule {
    std::string name;
    std::vector<double> weights;  // size n_steps + 1

    int n_steps() const { return static_cast<int>(weights.size()) - 1; }

    /// u_0 = u_n = 1/2, interior weights 1.
    static QuadratureRule trapezoidal(int n_steps);

    static QuadratureRule custom(std::vector<double> weights, std::string name = "custom");
};

}  // namespace specfilter
