#ifndef DTWSOM_SEQUENCE_HPP
#define DTWSOM_SEQUENCE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtwsom {

/// Raised when input data (files, documents, datasets) is malformed or
/// cannot satisfy an operation. Precondition violations on arguments use
/// std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A variable-length, d-dimensional time-series fragment.
///
/// Points are stored row-major: values()[i * dims() + k] is dimension k of
/// point i. A Sequence always holds at least one point and only finite
/// values.
class Sequence {
public:
    Sequence(std::vector<double> values, std::size_t dims, std::string id = {});

    static Sequence univariate(std::vector<double> values, std::string id = {}) {
        return Sequence(std::move(values), 1, std::move(id));
    }

    std::size_t length() const noexcept { return values_.size() / dims_; }
    std::size_t dims() const noexcept { return dims_; }

    std::span<const double> point(std::size_t i) const noexcept {
        return {values_.data() + i * dims_, dims_};
    }
    std::span<double> point(std::size_t i) noexcept {
        return {values_.data() + i * dims_, dims_};
    }
    double at(std::size_t i, std::size_t k) const noexcept { return values_[i * dims_ + k]; }

    std::span<const double> values() const noexcept { return values_; }
    const std::string& id() const noexcept { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }

    /// Value equality: same dims and bit-identical values. The id is ignored.
    friend bool operator==(const Sequence& a, const Sequence& b) noexcept {
        return a.dims_ == b.dims_ && a.values_ == b.values_;
    }

private:
    std::vector<double> values_;
    std::size_t dims_;
    std::string id_;
};

/// Several source sequences laid end to end, with the offset at which each
/// source begins.
class LongSeries {
public:
    LongSeries(Sequence values, std::vector<std::size_t> boundaries);

    const Sequence& values() const noexcept { return values_; }
    std::size_t length() const noexcept { return values_.length(); }
    std::size_t dims() const noexcept { return values_.dims(); }
    const std::vector<std::size_t>& boundaries() const noexcept { return boundaries_; }

private:
    Sequence values_;
    std::vector<std::size_t> boundaries_;
};

/// Standard deviation below which a dimension is treated as flat.
inline constexpr double kFlatSigma = 1e-8;

/// Per-dimension z-normalization with population standard deviation. Flat
/// dimensions come back as zeros.
Sequence znormalize(const Sequence& s);

/// Joins sequences end to end. Throws std::invalid_argument on an empty list
/// or mixed dimensions.
LongSeries concatenate(std::span<const Sequence> seqs);

} // namespace dtwsom

#endif
