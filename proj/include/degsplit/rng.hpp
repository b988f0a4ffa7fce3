#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace degsplit {

// Seeded random stream with hand-rolled draws so that results are
// bit-identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). Modulo bias is irrelevant here;
    // reproducibility is what matters.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    // Uniform double in [0, 1).
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Decorrelated child stream, e.g. one per benchmark trial.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace degsplit
