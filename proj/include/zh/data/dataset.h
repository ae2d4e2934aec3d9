#pragma once

#include <string>
#include <vector>

#include "zh/data/selfplay.h"
#include "zh/encoding/input_tensor.h"
#include "zh/encoding/targets.h"

namespace zh::data {

// One supervised example: board tensor, result-scaled policy target, value
// target for the player to move.
struct TrainingExample {
    InputTensor input;
    PolicyTarget policy;
    ValueTarget value;

    friend bool operator==(const TrainingExample&, const TrainingExample&) = default;
};

// In-memory example with the originating position kept alongside, so masked
// metrics can use the exact legal mask.
struct LabeledExample {
    Position pos;
    TrainingExample ex;
};

std::vector<LabeledExample> build_examples(const std::vector<GameRecord>& games);

// ZHDS binary format: magic "ZHDS", u32 version, u64 example count, then per
// example 960 bytes of {0,1} input, u16 action index, f32 scale, f32 value
// (little-endian). Round-trips are exact.
constexpr uint32_t kDatasetVersion = 1;

void export_dataset(const std::vector<GameRecord>& games, const std::string& path);
void write_dataset(const std::vector<TrainingExample>& examples,
                   const std::string& path);
std::vector<TrainingExample> load_dataset(const std::string& path);

// Rebuilds positions from stored tensors (en passant and history are not
// recoverable; see reconstruct_position).
std::vector<LabeledExample> label_dataset(const std::vector<TrainingExample>& examples);

}  // namespace zh::data
