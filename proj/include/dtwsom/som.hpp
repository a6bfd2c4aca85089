#ifndef DTWSOM_SOM_HPP
#define DTWSOM_SOM_HPP

#include "dtwsom/dtw.hpp"
#include "dtwsom/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dtwsom {

/// Neighbours whose Gaussian weight falls below this are not adapted.
inline constexpr double kNeighbourCutoff = 1e-3;
/// Lower bound on the decayed neighbourhood radius.
inline constexpr double kRadiusFloor = 0.1;
/// Default initial radius. Wider neighbourhoods pull units toward DTW blends
/// of unrelated clusters that then match nothing.
inline constexpr double kDefaultRadius = 0.3;

struct TrainingConfig {
    std::size_t epochs = 1;
    double learning_rate = 0.1;            // alpha_0
    double radius = 1.0;                   // r_0, in grid units
    std::optional<std::size_t> window;     // DTW band, unconstrained when empty
    std::uint64_t seed = 0;
    std::size_t threads = 1;               // 0 = all cores; results never depend on it

    /// Defaults for a rows x cols grid: alpha_0 = 0.1, r_0 = min(kDefaultRadius, max(rows, cols)).
    static TrainingConfig defaults_for(std::size_t rows, std::size_t cols);
};

/// Throws std::invalid_argument unless the config is usable on a rows x cols
/// grid: epochs >= 1, learning rate in [0, 1], 0 < radius <= max(rows, cols).
void validate(const TrainingConfig& config, std::size_t rows, std::size_t cols);

struct GridCell {
    std::size_t row;
    std::size_t col;
};

/// Rectangular grid of sequence-valued units, row-major.
class SomNetwork {
public:
    SomNetwork(std::size_t rows, std::size_t cols, std::vector<Sequence> units, TrainingConfig config = {});

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return units_.size(); }
    std::size_t dims() const noexcept { return units_.front().dims(); }

    const Sequence& unit(std::size_t i) const { return units_.at(i); }
    const std::vector<Sequence>& units() const noexcept { return units_; }
    /// Replaces unit i; the replacement must keep its length and dimension.
    void set_unit(std::size_t i, Sequence s);

    GridCell cell(std::size_t i) const noexcept { return {i / cols_, i % cols_}; }
    std::size_t index(GridCell c) const noexcept { return c.row * cols_ + c.col; }

    std::size_t epoch() const noexcept { return epoch_; }
    void set_epoch(std::size_t e) noexcept { epoch_ = e; }

    const TrainingConfig& config() const noexcept { return config_; }
    void set_config(TrainingConfig c);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Sequence> units_;
    std::size_t epoch_ = 0;
    TrainingConfig config_;
};

struct TrainingTrace {
    double initial_qe = 0.0;           // before the first epoch
    std::vector<double> epoch_qe;      // mean BMU distance while presenting
    std::vector<double> learning_rate;
    std::vector<double> radius;
    double final_qe = 0.0;             // after the last epoch
};

struct BestMatch {
    std::size_t index;
    double distance;
};

/// Units are distinct (by value) patterns sampled without replacement.
/// Throws std::invalid_argument if fewer distinct patterns than units exist.
SomNetwork init_random_sample(std::span<const Sequence> patterns, std::size_t rows, std::size_t cols,
                              std::uint64_t seed);

/// Order in which anchors are placed: the main diagonal first, then the rest
/// of the grid by increasing |row - col|, ties in row-major order.
std::vector<std::size_t> anchor_fill_order(std::size_t rows, std::size_t cols);

/// Places patterns[anchors[k]] at anchor_fill_order()[k] and fills the rest
/// by random sample, never duplicating a unit.
SomNetwork init_anchor(std::span<const Sequence> patterns, std::span<const std::size_t> anchors,
                       std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Gaussian of the grid distance between units c and i.
double neighborhood(const SomNetwork& net, std::size_t c, std::size_t i, double radius);

/// Nearest unit under DTW (network window); ties go to the lowest index.
BestMatch bmu(const SomNetwork& net, const Sequence& pattern);

/// Moves each unit point toward the mean of the pattern points aligned to it:
/// w_i += strength * (mean_{j in J_i} x_j - w_i).
Sequence adapt_unit(const Sequence& unit, const Sequence& pattern, const AlignmentPath& path, double strength);

/// One pass over the patterns in a seed-determined order. Returns the mean
/// BMU distance seen during the pass.
double train_epoch(SomNetwork& net, std::span<const Sequence> patterns, double learning_rate, double radius,
                   std::uint64_t seed);

/// Learning rate and radius at epoch t of T under linear decay.
double learning_rate_at(const TrainingConfig& config, std::size_t t);
double radius_at(const TrainingConfig& config, std::size_t t);

/// Runs the remaining epochs (net.epoch() .. T-1) of the network's config.
TrainingTrace train(SomNetwork& net, std::span<const Sequence> patterns);

/// Mean DTW distance from each pattern to its BMU.
double quantization_error(const SomNetwork& net, std::span<const Sequence> patterns);

} // namespace dtwsom

#endif
