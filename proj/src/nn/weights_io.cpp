#include "zh/nn/weights_io.h"

#include <cstring>
#include <fstream>

#include "zh/errors.h"

namespace zh::nn {

namespace {

constexpr char kMagic[4] = {'Z', 'H', 'N', 'N'};

void write_u32(std::ostream& out, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw FormatError("weights file truncated");
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
           uint32_t(b[3]) << 24;
}

void write_tensor(std::ostream& out, const Tensor& t) {
    write_u32(out, static_cast<uint32_t>(t.shape.size()));
    for (int d : t.shape) write_u32(out, static_cast<uint32_t>(d));
    for (float f : t.values) {
        uint32_t bits;
        std::memcpy(&bits, &f, 4);
        write_u32(out, bits);
    }
}

Tensor read_tensor(std::istream& in) {
    const uint32_t rank = read_u32(in);
    if (rank > 8) throw FormatError("implausible tensor rank");
    Tensor t;
    t.shape.resize(rank);
    int64_t count = 1;
    for (uint32_t i = 0; i < rank; ++i) {
        t.shape[i] = static_cast<int>(read_u32(in));
        if (t.shape[i] <= 0 || count > (int64_t(1) << 32))
            throw FormatError("implausible tensor dimension");
        count *= t.shape[i];
    }
    t.values.resize(static_cast<size_t>(count));
    for (float& f : t.values) {
        const uint32_t bits = read_u32(in);
        std::memcpy(&f, &bits, 4);
    }
    return t;
}

template <typename Fn>
void for_each_tensor(NetworkWeights& w, Fn&& fn) {
    fn(w.stem.weight);
    fn(w.stem.bn.gamma), fn(w.stem.bn.beta), fn(w.stem.bn.mean), fn(w.stem.bn.var);
    for (auto& block : w.blocks) {
        fn(block.conv1.weight);
        fn(block.conv1.bn.gamma), fn(block.conv1.bn.beta);
        fn(block.conv1.bn.mean), fn(block.conv1.bn.var);
        fn(block.conv2.weight);
        fn(block.conv2.bn.gamma), fn(block.conv2.bn.beta);
        fn(block.conv2.bn.mean), fn(block.conv2.bn.var);
    }
    fn(w.policy_conv_w), fn(w.policy_conv_b);
    fn(w.policy_fc_w), fn(w.policy_fc_b);
    fn(w.value_conv_w), fn(w.value_conv_b);
    fn(w.value_fc_w), fn(w.value_fc_b);
}

}  // namespace

void save_weights(const std::string& path, const NetworkConfig& config,
                  const NetworkWeights& weights) {
    validate_shapes(config, weights);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open weights file for writing: " + path);
    out.write(kMagic, 4);
    write_u32(out, kWeightsVersion);
    write_u32(out, config.blocks);
    write_u32(out, config.channels);
    write_u32(out, config.policy_head_planes);
    write_u32(out, config.value_head_planes);
    for_each_tensor(const_cast<NetworkWeights&>(weights),
                    [&](Tensor& t) { write_tensor(out, t); });
    if (!out) throw FormatError("failed writing weights file: " + path);
}

std::pair<NetworkConfig, NetworkWeights> load_weights(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open weights file: " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("bad weights magic");
    const uint32_t version = read_u32(in);
    if (version != kWeightsVersion) throw FormatError("unsupported weights version");

    NetworkConfig config;
    config.blocks = read_u32(in);
    config.channels = read_u32(in);
    config.policy_head_planes = read_u32(in);
    config.value_head_planes = read_u32(in);
    if (config.blocks == 0 || config.channels == 0 ||
        config.policy_head_planes == 0 || config.value_head_planes == 0)
        throw FormatError("config fields must be positive");
    if (config.blocks > 1024 || config.channels > 4096)
        throw FormatError("implausible network size");

    NetworkWeights weights;
    weights.blocks.resize(config.blocks);
    for_each_tensor(weights, [&](Tensor& t) { t = read_tensor(in); });

    char extra;
    if (in.read(&extra, 1)) throw FormatError("trailing bytes in weights file");

    validate_shapes(config, weights);
    return {config, weights};
}

}  // namespace zh::nn
