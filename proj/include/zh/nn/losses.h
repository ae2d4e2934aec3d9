#pragma once

#include <span>

#include "zh/encoding/targets.h"

namespace zh::nn {

// Smoothing floor applied inside the logarithm.
constexpr double kLossEpsilon = 1e-9;

// Mean over all 2308 entries of pred_i - t_i * ln(pred_i), where t is the
// scaled one-hot target. Throws DomainError on nonpositive predictions.
double poisson_nll(std::span<const float> pred, const PolicyTarget& target);

double mse(double pred_value, const ValueTarget& target);

}  // namespace zh::nn
