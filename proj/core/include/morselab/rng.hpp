#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace morselab {

/// Counter-based splittable generator (SplitMix64 mixing of seed and counter).
///
/// Streams derived with split() are independent of how many values the parent
/// has produced, which keeps parallel and sequential runs byte-identical.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : seed_(mix(seed)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    Rng split(std::uint64_t stream) const
    {
        Rng child(0);
        child.seed_ = mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL));
        return child;
    }

    /// Uniform integer in [0, bound). Bias-free rejection, platform independent.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1) return 0;
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace morselab
