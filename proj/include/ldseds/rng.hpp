#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace ldseds {

// SplitMix64 counter generator. The k-th output is a pure function of
// (seed, k), so streaming and random access agree: unit_at(seed, k) equals
// the (k+1)-th call to next_unit() on a generator seeded with seed. Every
// source of randomness in the library goes through this type; no platform
// RNG or libstdc++ distribution is involved, which keeps runs bit
// reproducible across builds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return to_unit(next()); }

    static double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

    static std::uint64_t value_at(std::uint64_t seed, std::uint64_t index) {
        return mix(seed + (index + 1) * kGamma);
    }

    static double unit_at(std::uint64_t seed, std::uint64_t index) {
        return to_unit(value_at(seed, index));
    }

    // Unbiased-enough bounded draw via 128-bit multiply-shift; n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

  private:
    std::uint64_t state_;
};

// Order-independent derivation of child seeds from a parent seed and a
// sequence of labels. Used for the experiment seed fan-out.
inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
    return SplitMix64::mix(a ^ (b + SplitMix64::kGamma + (a << 6) + (a >> 2)));
}

// FNV-1a over the bytes of a label.
inline std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Fisher-Yates permutation of {0..length-1} driven by draws.
inline std::vector<std::size_t> random_permutation(std::size_t length, SplitMix64& draws) {
    if (length == 0) throw std::invalid_argument("random_permutation: length must be >= 1");
    std::vector<std::size_t> perm(length);
    for (std::size_t i = 0; i < length; ++i) perm[i] = i;
    for (std::size_t i = length - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(draws.next_below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace ldseds
