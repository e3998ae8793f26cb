#pragma once

// Estimation error model for fused sensor readings.
//
// Every node quantizes its observation with an S-bit uniform quantizer over
// [-W, W], so the step is 2W/(2^S - 1) and the quantization noise variance is
// step^2/12. Fusing K nodes averages out both noise terms, giving
// (sigma2 + step^2/12) / K.

#include <cmath>
#include <stdexcept>

#include "coverplan/model.hpp"

namespace coverplan {

inline double quantization_step(const EstimationParams& p) {
    return 2.0 * p.W / (std::pow(2.0, p.S) - 1.0);
}

inline double quantization_noise_variance(const EstimationParams& p) {
    const double step = quantization_step(p);
    return step * step / 12.0;
}

// Estimation MSE with readings collected from `collected` nodes.
// Strictly decreasing in both the node count and the bit depth.
inline double mse(const EstimationParams& p, int collected) {
    if (collected < 1) {
        throw std::domain_error("mse: no data collected, estimation error is unbounded");
    }
    return (p.sigma2 + quantization_noise_variance(p)) / static_cast<double>(collected);
}

}  // namespace coverplan
