#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace upsilon {

/// SplitMix64 finalizer over (seed, stream): the seed of an independent stream.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seedable, splittable generator. The engine is mt19937_64, whose output
/// sequence is fixed by the standard; the bounded draws below are implemented
/// here so that results do not depend on the standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(split_seed(seed, 0)) {}

    /// Stream `stream` of `seed`; streams are independent of draw order.
    static Rng split(std::uint64_t seed, std::uint64_t stream) { return Rng(split_seed(seed, stream), 0); }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p);

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    Rng(std::uint64_t raw_seed, int) : engine_(raw_seed) {}

    std::mt19937_64 engine_;
};

} // namespace upsilon
