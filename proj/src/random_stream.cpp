#include "seqtrial/random_stream.hpp"

#include <array>

namespace seqtrial {
namespace {

std::seed_seq make_seed_seq(std::uint64_t master_seed, std::uint64_t index) {
    return std::seed_seq{static_cast<std::uint32_t>(master_seed),
                         static_cast<std::uint32_t>(master_seed >> 32),
                         static_cast<std::uint32_t>(index),
                         static_cast<std::uint32_t>(index >> 32)};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    auto seq = make_seed_seq(master_seed, index);
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::for_replicate(std::uint64_t master_seed, std::uint64_t index) {
    RandomStream stream(0);
    auto seq = make_seed_seq(master_seed, index);
    stream.engine_.seed(seq);
    return stream;
}

}  // namespace seqtrial
