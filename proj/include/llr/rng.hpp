#ifndef LLR_RNG_HPP
#define LLR_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace llr {

// Seeded determinism matters more here than raw speed: benchmark records and
// reduction plans must be reproducible bit-for-bit across platforms, so all
// draws go through mt19937_64 with hand-rolled mappings instead of the
// implementation-defined std distributions.
inline constexpr const char* kRngAlgorithm = "mt19937_64/fisher-yates";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in (0, 1].
    double uniform01() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). Modulo mapping; bias is negligible for
    /// the desk-scale bounds used here and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    /// k distinct values sampled from `pool` by partial Fisher-Yates.
    std::vector<long> sample(std::vector<long> pool, std::size_t k);

    /// Derives an independent stream for a sub-task.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

private:
    std::mt19937_64 gen_;
};

inline std::vector<long> Rng::sample(std::vector<long> pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

inline std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 finalizer over seed ^ salt
    std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace llr

#endif  // LLR_RNG_HPP
