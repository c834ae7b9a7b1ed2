#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace conftree {

// FNV-1a, used to derive independent RNG streams from (seed, labels...).
inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Deterministic RNG. All draws go through explicit conversions (no
// std::*_distribution), so sequences are identical across standard
// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // stream derived from a master seed and a path of labels, e.g.
    // Rng::derive(seed, {"nodeview", conf_id, "3", "7"})
    static Rng derive(std::uint64_t master_seed, const std::vector<std::string>& labels);

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform();

    // uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n);

    // standard normal via Box-Muller (no cached spare, for simple state)
    double normal();

    // first k of a seeded Fisher-Yates shuffle of 0..n-1; k = n gives a
    // full permutation, smaller k a uniform sample without replacement
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

}  // namespace conftree
