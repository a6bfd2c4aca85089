#include "dtwsom/synthgen.hpp"

#include "dtwsom/random.hpp"

#include <stdexcept>
#include <string>

namespace dtwsom::synth {

std::vector<LabeledCenter> generate(std::size_t count, std::uint64_t seed) {
    if (count == 0) throw std::invalid_argument("synthetic center count must be positive");
    Rng rng(seed);
    std::vector<LabeledCenter> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t cluster = k % kClusters.size();
        std::array<std::size_t, 3> lengths{};
        for (auto& len : lengths)
            len = static_cast<std::size_t>(rng.integer(kMinSegment, kMaxSegment));
        std::vector<double> values;
        for (std::size_t s = 0; s < 3; ++s) {
            const Interval iv = interval_of(kClusters[cluster].behaviors[s]);
            for (std::size_t i = 0; i < lengths[s]; ++i) values.push_back(rng.uniform(iv.lo, iv.hi));
        }
        out.push_back({Sequence::univariate(std::move(values), "synth-" + std::to_string(k)), cluster, lengths});
    }
    return out;
}

} // namespace dtwsom::synth
