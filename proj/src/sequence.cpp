#include "dtwsom/sequence.hpp"

#include <cmath>

namespace dtwsom {

Sequence::Sequence(std::vector<double> values, std::size_t dims, std::string id)
    : values_(std::move(values)), dims_(dims), id_(std::move(id)) {
    if (dims_ == 0) throw std::invalid_argument("sequence dimension must be positive");
    if (values_.empty()) throw std::invalid_argument("sequence must hold at least one point");
    if (values_.size() % dims_ != 0)
        throw std::invalid_argument("sequence value count is not a multiple of its dimension");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("sequence values must be finite");
}

LongSeries::LongSeries(Sequence values, std::vector<std::size_t> boundaries)
    : values_(std::move(values)), boundaries_(std::move(boundaries)) {
    if (boundaries_.empty() || boundaries_.front() != 0)
        throw std::invalid_argument("long series boundaries must start at 0");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i] >= values_.length())
            throw std::invalid_argument("long series boundary past the end");
        if (i > 0 && boundaries_[i] <= boundaries_[i - 1])
            throw std::invalid_argument("long series boundaries must be strictly increasing");
    }
}

Sequence znormalize(const Sequence& s) {
    const std::size_t n = s.length();
    const std::size_t d = s.dims();
    std::vector<double> out(s.values().begin(), s.values().end());
    for (std::size_t k = 0; k < d; ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += s.at(i, k);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = s.at(i, k) - mean;
            var += c * c;
        }
        const double sigma = std::sqrt(var / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            out[i * d + k] = sigma < kFlatSigma ? 0.0 : (s.at(i, k) - mean) / sigma;
    }
    return Sequence(std::move(out), d, s.id());
}

LongSeries concatenate(std::span<const Sequence> seqs) {
    if (seqs.empty()) throw std::invalid_argument("cannot concatenate an empty list of sequences");
    const std::size_t d = seqs.front().dims();
    std::vector<double> values;
    std::vector<std::size_t> boundaries;
    std::size_t offset = 0;
    for (const auto& s : seqs) {
        if (s.dims() != d) throw std::invalid_argument("cannot concatenate sequences of different dimension");
        boundaries.push_back(offset);
        values.insert(values.end(), s.values().begin(), s.values().end());
        offset += s.length();
    }
    return LongSeries(Sequence(std::move(values), d), std::move(boundaries));
}

} // namespace dtwsom
