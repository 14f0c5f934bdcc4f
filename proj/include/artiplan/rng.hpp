#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace artiplan {

// Deterministic PRNG used everywhere randomness is needed. We do not use
// <random> distributions because their output is not pinned by the standard;
// benchmark outputs must be reproducible byte-for-byte across toolchains.
//
// Every randomized code path derives its stream from a master seed plus a
// purpose label (and optional indices), so adding a consumer never perturbs
// the draws seen by existing ones.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so that small seeds diverge immediately.
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        // splitmix64 (Steele, Lea, Flood / Vigna's public-domain constants).
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n). Rejection-free modulo bias is irrelevant at
    // our n (<< 2^32) but we keep it exact anyway via rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Domain-separated seed derivation: hash the purpose label and indices into
// the master seed (FNV-1a over the label, splitmix finalizer over indices).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ master;
    for (const char c : purpose) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ULL;
    }
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    h = mix(h + 0x9e3779b97f4a7c15ULL * (a + 1));
    h = mix(h + 0x9e3779b97f4a7c15ULL * (b + 1));
    return h;
}

}  // namespace artiplan
