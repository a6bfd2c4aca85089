#ifndef DTWSOM_MOTIF_HPP
#define DTWSOM_MOTIF_HPP

#include "dtwsom/sequence.hpp"

#include <cstddef>
#include <vector>

namespace dtwsom {

/// Nearest-neighbour z-normalized Euclidean distance for every length-m
/// subsequence of a univariate series, ignoring neighbours inside the
/// exclusion zone (|i - j| < exclusion_zone).
struct MatrixProfile {
    std::size_t window = 0;
    std::size_t exclusion_zone = 0;
    std::vector<double> distances;
    std::vector<std::size_t> indices;
};

/// ceil(m / 2).
constexpr std::size_t exclusion_zone_for(std::size_t window) noexcept { return (window + 1) / 2; }

/// Rolling mean / standard deviation of every window, plus the centred
/// series they were computed on. Shared by the profile and the distance
/// profiles used during motif extraction.
class WindowStats {
public:
    WindowStats(const LongSeries& series, std::size_t window);

    std::size_t window() const noexcept { return window_; }
    std::size_t count() const noexcept { return mean_.size(); }
    bool flat(std::size_t i) const noexcept { return flat_[i]; }

    /// Exact z-normalized distance between windows i and j (direct dot product).
    double distance(std::size_t i, std::size_t j) const noexcept;
    /// z-normalized distance from a window dot product q = sum x[i+k] x[j+k].
    double distance_from_dot(std::size_t i, std::size_t j, double q) const noexcept;
    /// distance(i, j) for every j.
    std::vector<double> distance_profile(std::size_t i) const;

    double dot(std::size_t i, std::size_t j) const noexcept;
    /// dot(i, j) given dot(i - 1, j - 1).
    double roll_dot(std::size_t i, std::size_t j, double previous) const noexcept {
        return previous - x_[i - 1] * x_[j - 1] + x_[i + window_ - 1] * x_[j + window_ - 1];
    }

private:
    std::size_t window_;
    std::vector<double> x_; // series minus its global mean
    std::vector<double> mean_;
    std::vector<double> sigma_;
    std::vector<char> flat_;
};

/// O(N^2) profile from dot products rolled along each diagonal. Diagonals are
/// split across `threads` workers (0 = all cores); the result does not depend
/// on the thread count. Throws std::invalid_argument unless the series is
/// univariate and N >= 2m.
MatrixProfile matrix_profile(const LongSeries& series, std::size_t window, std::size_t threads = 1);

struct Motif {
    Sequence center;                  // raw values at center_offset
    std::size_t center_offset = 0;
    double pair_distance = 0.0;       // profile value at the center
    double radius = 0.0;              // R = 2 * pair_distance
    std::vector<std::size_t> members; // ascending distance from the center, center first
    std::size_t rank = 0;             // 1-based discovery order
};

struct MotifSet {
    std::size_t window = 0;
    std::vector<Motif> motifs;
};

/// Greedy motif discovery over the matrix profile.
///
/// Repeatedly takes the smallest profile value among offsets not yet
/// excluded, sets R = 2 * that distance, gathers every unexcluded offset
/// within R of the center (skipping ones overlapping an accepted member),
/// excludes the zones around center and members, and accepts the motif only
/// if its center is more than 2R from every accepted center. Stops after
/// max_motifs motifs or when every offset is excluded.
MotifSet extract_motifs(const LongSeries& series, std::size_t window, std::size_t max_motifs,
                        std::size_t threads = 1);

/// Centers in rank order.
std::vector<Sequence> motif_centers(const MotifSet& set);

} // namespace dtwsom

#endif
