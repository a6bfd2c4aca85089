#ifndef DTWSOM_SYNTHGEN_HPP
#define DTWSOM_SYNTHGEN_HPP

#include "dtwsom/sequence.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dtwsom::synth {

enum class Behavior { low, middle, high };

struct Interval {
    double lo;
    double hi;
};

constexpr Interval interval_of(Behavior b) noexcept {
    switch (b) {
    case Behavior::low: return {-3.0, -1.5};
    case Behavior::middle: return {-0.5, 0.5};
    case Behavior::high: return {1.5, 3.0};
    }
    return {0.0, 0.0};
}

struct ClusterSpec {
    std::string_view name;
    std::array<Behavior, 3> behaviors;
};

inline constexpr std::array<ClusterSpec, 3> kClusters{{
    {"low-middle-high", {Behavior::low, Behavior::middle, Behavior::high}},
    {"high-middle-low", {Behavior::high, Behavior::middle, Behavior::low}},
    {"middle-middle-middle", {Behavior::middle, Behavior::middle, Behavior::middle}},
}};

inline constexpr std::size_t kMinSegment = 5;
inline constexpr std::size_t kMaxSegment = 10;

struct LabeledCenter {
    Sequence center;
    std::size_t cluster;                         // index into kClusters
    std::array<std::size_t, 3> segment_lengths;
};

/// `count` synthetic motif centers; center k belongs to cluster k % 3.
/// Throws std::invalid_argument when count is zero.
std::vector<LabeledCenter> generate(std::size_t count, std::uint64_t seed);

} // namespace dtwsom::synth

#endif
