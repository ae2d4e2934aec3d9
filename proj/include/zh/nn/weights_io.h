#pragma once

#include <string>
#include <utility>

#include "zh/nn/network.h"

namespace zh::nn {

// Weights file: magic "ZHNN", version (u32), config (4 x u32), then each
// layer tensor in fixed order as: rank (u32), dims (u32 each), raw 32-bit
// little-endian floats. Tensor order:
//   stem conv, stem bn (gamma,beta,mean,var),
//   per block: conv1, bn1 x4, conv2, bn2 x4,
//   policy conv w/b, policy fc w/b, value conv w/b, value fc w/b.
// Round-trips are bit-exact.
constexpr uint32_t kWeightsVersion = 1;

void save_weights(const std::string& path, const NetworkConfig& config,
                  const NetworkWeights& weights);

// Throws FormatError (bad magic/version/truncation) or ShapeMismatch.
std::pair<NetworkConfig, NetworkWeights> load_weights(const std::string& path);

}  // namespace zh::nn
