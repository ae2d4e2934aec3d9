#include "zh/data/dataset.h"

#include <cstring>
#include <fstream>

#include "zh/errors.h"

namespace zh::data {

std::vector<LabeledExample> build_examples(const std::vector<GameRecord>& games) {
    std::vector<LabeledExample> out;
    for (const GameRecord& game : games) {
        Position pos = initial_position();
        for (const Move& m : game.moves) {
            LabeledExample ex;
            ex.pos = pos;
            ex.ex.input = encode_position(pos);
            ex.ex.policy = policy_target(m, pos, game.result);
            ex.ex.value = value_target(game.result, pos.side_to_move());
            out.push_back(std::move(ex));
            pos = apply_move(pos, m);
        }
    }
    return out;
}

namespace {

constexpr char kMagic[4] = {'Z', 'H', 'D', 'S'};

void write_u32(std::ostream& out, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void write_f32(std::ostream& out, float f) {
    uint32_t bits;
    std::memcpy(&bits, &f, 4);
    write_u32(out, bits);
}

uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw FormatError("dataset file truncated");
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
           uint32_t(b[3]) << 24;
}

float read_f32(std::istream& in) {
    const uint32_t bits = read_u32(in);
    float f;
    std::memcpy(&f, &bits, 4);
    return f;
}

}  // namespace

void write_dataset(const std::vector<TrainingExample>& examples,
                   const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open dataset file for writing: " + path);
    out.write(kMagic, 4);
    write_u32(out, kDatasetVersion);
    const uint64_t count = examples.size();
    write_u32(out, static_cast<uint32_t>(count));
    write_u32(out, static_cast<uint32_t>(count >> 32));
    for (const TrainingExample& ex : examples) {
        unsigned char bytes[InputTensor::kSize];
        for (int i = 0; i < InputTensor::kSize; ++i)
            bytes[i] = ex.input.values[i] != 0.0f ? 1 : 0;
        out.write(reinterpret_cast<const char*>(bytes), InputTensor::kSize);
        const uint16_t index = static_cast<uint16_t>(ex.policy.index.value());
        unsigned char ib[2] = {static_cast<unsigned char>(index),
                               static_cast<unsigned char>(index >> 8)};
        out.write(reinterpret_cast<const char*>(ib), 2);
        write_f32(out, ex.policy.scale);
        write_f32(out, ex.value.value);
    }
    if (!out) throw FormatError("failed writing dataset file: " + path);
}

void export_dataset(const std::vector<GameRecord>& games, const std::string& path) {
    std::vector<TrainingExample> examples;
    for (auto& labeled : build_examples(games))
        examples.push_back(std::move(labeled.ex));
    write_dataset(examples, path);
}

std::vector<TrainingExample> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open dataset file: " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("bad dataset magic");
    if (read_u32(in) != kDatasetVersion)
        throw FormatError("unsupported dataset version");
    const uint64_t lo = read_u32(in);
    const uint64_t hi = read_u32(in);
    const uint64_t count = lo | hi << 32;

    std::vector<TrainingExample> examples;
    examples.reserve(count);
    for (uint64_t n = 0; n < count; ++n) {
        TrainingExample ex;
        unsigned char bytes[InputTensor::kSize];
        if (!in.read(reinterpret_cast<char*>(bytes), InputTensor::kSize))
            throw FormatError("dataset file truncated");
        for (int i = 0; i < InputTensor::kSize; ++i) {
            if (bytes[i] > 1) throw FormatError("input features must be 0 or 1");
            ex.input.values[i] = bytes[i];
        }
        unsigned char ib[2];
        if (!in.read(reinterpret_cast<char*>(ib), 2))
            throw FormatError("dataset file truncated");
        const uint16_t index = uint16_t(ib[0]) | uint16_t(ib[1]) << 8;
        if (index >= kNumActions) throw FormatError("action index out of range");
        ex.policy.index = ActionIndex(index);
        ex.policy.scale = read_f32(in);
        ex.value.value = read_f32(in);
        examples.push_back(std::move(ex));
    }
    char extra;
    if (in.read(&extra, 1)) throw FormatError("trailing bytes in dataset file");
    return examples;
}

std::vector<LabeledExample> label_dataset(
    const std::vector<TrainingExample>& examples) {
    std::vector<LabeledExample> out;
    out.reserve(examples.size());
    for (const TrainingExample& ex : examples)
        out.push_back({reconstruct_position(ex.input), ex});
    return out;
}

}  // namespace zh::data
