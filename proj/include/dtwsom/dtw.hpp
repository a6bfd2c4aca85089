#ifndef DTWSOM_DTW_HPP
#define DTWSOM_DTW_HPP

#include "dtwsom/sequence.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dtwsom {

/// (index into a, index into b) pairs, from (0,0) to the last cells.
using AlignmentPath = std::vector<std::pair<std::size_t, std::size_t>>;

struct DtwResult {
    double distance = 0.0;
    AlignmentPath path;
};

/// True when cell (i, j) lies in the warping band |i*len_b/len_a - j| <= window.
/// The comparison is done in integers, so the band is exact.
constexpr bool in_band(std::size_t i, std::size_t j, std::size_t len_a, std::size_t len_b,
                       std::optional<std::size_t> window) noexcept {
    if (!window) return true;
    const auto lhs = static_cast<long long>(i) * static_cast<long long>(len_b);
    const auto rhs = static_cast<long long>(j) * static_cast<long long>(len_a);
    const auto diff = lhs > rhs ? lhs - rhs : rhs - lhs;
    return diff <= static_cast<long long>(*window) * static_cast<long long>(len_a);
}

/// Squared Euclidean distance between two points of equal dimension.
double squared_distance(std::span<const double> x, std::span<const double> y) noexcept;

/// Dynamic time warping with squared-Euclidean local cost; the distance is
/// the square root of the accumulated cost along the optimal path.
///
/// With a window, cells outside in_band() are forbidden. The window must be
/// at least |len(a) - len(b)|. Backtracking prefers the diagonal step, then
/// the step that advances a, then the step that advances b.
///
/// Throws std::invalid_argument on a dimension mismatch or infeasible window.
DtwResult dtw(const Sequence& a, const Sequence& b, std::optional<std::size_t> window = std::nullopt);

/// Same distance as dtw() but keeps only two rows of the cost matrix.
double dtw_distance(const Sequence& a, const Sequence& b,
                    std::optional<std::size_t> window = std::nullopt);

/// For each index of a (the unit side) the contiguous run of b indices
/// matched to it.
std::vector<std::vector<std::size_t>> path_groups(const AlignmentPath& path, std::size_t unit_len);

/// Checks the structural path invariants: starts at (0,0), ends at the last
/// cells, and each step advances i, j or both by exactly one.
bool is_valid_path(const AlignmentPath& path, std::size_t len_a, std::size_t len_b) noexcept;

} // namespace dtwsom

#endif
