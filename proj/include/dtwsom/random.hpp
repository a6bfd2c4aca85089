#ifndef DTWSOM_RANDOM_HPP
#define DTWSOM_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace dtwsom {

/// Seeded generator whose draws are identical on every platform.
///
/// std::mt19937_64 and std::seed_seq are fully specified by the standard but
/// the std distributions and std::shuffle are not, so the mappings onto
/// integer ranges and reals are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng({seed}) {}
    Rng(std::initializer_list<std::uint64_t> words) {
        std::vector<std::uint32_t> halves;
        for (auto w : words) {
            halves.push_back(static_cast<std::uint32_t>(w));
            halves.push_back(static_cast<std::uint32_t>(w >> 32));
        }
        std::seed_seq seq(halves.begin(), halves.end());
        engine_.seed(seq);
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform real in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace dtwsom

#endif
