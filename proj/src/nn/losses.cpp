#include "zh/nn/losses.h"

#include <cmath>

#include "zh/errors.h"

namespace zh::nn {

double poisson_nll(std::span<const float> pred, const PolicyTarget& target) {
    if (pred.size() != kNumActions)
        throw DomainError("policy prediction must have 2308 entries");
    double sum = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        const double p = pred[i];
        if (!(p > 0.0)) throw DomainError("poisson_nll requires positive predictions");
        sum += p;
        if (static_cast<int>(i) == target.index.value())
            sum -= double(target.scale) * std::log(std::max(p, kLossEpsilon));
    }
    return sum / pred.size();
}

double mse(double pred_value, const ValueTarget& target) {
    const double d = pred_value - target.value;
    return d * d;
}

}  // namespace zh::nn
