#pragma once

#include <cstdint>
#include <random>

namespace seqtrial {

// Mixes (master_seed, index) into a 64-bit seed through std::seed_seq.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

// A seeded stream of normal and uniform variates. One stream belongs to one
// replicate at a time; it may be moved between threads but is not shared.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    // Independent stream for replicate `index` under `master_seed`.
    static RandomStream for_replicate(std::uint64_t master_seed, std::uint64_t index);

    double normal() { return normal_(engine_); }

    // Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace seqtrial
