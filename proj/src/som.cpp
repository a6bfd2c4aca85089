#include "dtwsom/som.hpp"

#include "dtwsom/parallel.hpp"
#include "dtwsom/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dtwsom {

namespace {

constexpr std::uint64_t kInitStream = 0x1d;
constexpr std::uint64_t kEpochStream = 0xe9;

void check_patterns(std::span<const Sequence> patterns) {
    if (patterns.empty()) throw std::invalid_argument("no training patterns");
    const std::size_t d = patterns.front().dims();
    for (const auto& p : patterns)
        if (p.dims() != d) throw std::invalid_argument("training patterns differ in dimension");
}

bool contains_value(const std::vector<Sequence>& chosen, const Sequence& s) {
    return std::find(chosen.begin(), chosen.end(), s) != chosen.end();
}

// Draws patterns in random order until `want` more distinct values are in
// `chosen`. Throws if the patterns run out first.
void fill_distinct(std::span<const Sequence> patterns, std::vector<Sequence>& chosen, std::size_t want, Rng& rng) {
    std::vector<std::size_t> order(patterns.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    const std::size_t target = chosen.size() + want;
    for (std::size_t idx : order) {
        if (chosen.size() == target) break;
        if (!contains_value(chosen, patterns[idx])) chosen.push_back(patterns[idx]);
    }
    if (chosen.size() < target)
        throw std::invalid_argument("not enough distinct patterns to initialise " + std::to_string(target) +
                                    " units");
}

} // namespace

TrainingConfig TrainingConfig::defaults_for(std::size_t rows, std::size_t cols) {
    TrainingConfig c;
    c.radius = std::min(kDefaultRadius, static_cast<double>(std::max(rows, cols)));
    return c;
}

void validate(const TrainingConfig& config, std::size_t rows, std::size_t cols) {
    if (config.epochs == 0) throw std::invalid_argument("epochs must be at least 1");
    if (!(config.learning_rate >= 0.0 && config.learning_rate <= 1.0))
        throw std::invalid_argument("learning rate must lie in [0, 1]");
    if (!(config.radius > 0.0) || config.radius > static_cast<double>(std::max(rows, cols)))
        throw std::invalid_argument("radius must lie in (0, max(rows, cols)]");
}

SomNetwork::SomNetwork(std::size_t rows, std::size_t cols, std::vector<Sequence> units, TrainingConfig config)
    : rows_(rows), cols_(cols), units_(std::move(units)), config_(config) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("grid must have at least one row and column");
    if (units_.size() != rows_ * cols_) throw std::invalid_argument("unit count does not match the grid");
    for (const auto& u : units_)
        if (u.dims() != units_.front().dims()) throw std::invalid_argument("units differ in dimension");
    validate(config_, rows_, cols_);
}

void SomNetwork::set_unit(std::size_t i, Sequence s) {
    auto& u = units_.at(i);
    if (s.length() != u.length() || s.dims() != u.dims())
        throw std::invalid_argument("unit replacement must keep length and dimension");
    u = std::move(s);
}

void SomNetwork::set_config(TrainingConfig c) {
    validate(c, rows_, cols_);
    config_ = c;
}

SomNetwork init_random_sample(std::span<const Sequence> patterns, std::size_t rows, std::size_t cols,
                              std::uint64_t seed) {
    check_patterns(patterns);
    Rng rng({seed, kInitStream});
    std::vector<Sequence> chosen;
    fill_distinct(patterns, chosen, rows * cols, rng);
    return SomNetwork(rows, cols, std::move(chosen), TrainingConfig::defaults_for(rows, cols));
}

std::vector<std::size_t> anchor_fill_order(std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> order;
    order.reserve(rows * cols);
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) order.push_back(k * cols + k);
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (r != c) rest.push_back(r * cols + c);
    auto off_diagonal = [cols](std::size_t i) {
        const std::size_t r = i / cols;
        const std::size_t c = i % cols;
        return r > c ? r - c : c - r;
    };
    std::stable_sort(rest.begin(), rest.end(),
                     [&](std::size_t x, std::size_t y) { return off_diagonal(x) < off_diagonal(y); });
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

SomNetwork init_anchor(std::span<const Sequence> patterns, std::span<const std::size_t> anchors,
                       std::size_t rows, std::size_t cols, std::uint64_t seed) {
    check_patterns(patterns);
    const std::size_t units = rows * cols;
    if (anchors.size() > units)
        throw std::invalid_argument("more anchors (" + std::to_string(anchors.size()) + ") than units (" +
                                    std::to_string(units) + ")");
    std::vector<Sequence> chosen;
    for (std::size_t a : anchors) {
        if (a >= patterns.size()) throw std::invalid_argument("anchor index " + std::to_string(a) + " out of range");
        if (contains_value(chosen, patterns[a]))
            throw std::invalid_argument("anchor " + std::to_string(a) + " duplicates an earlier anchor");
        chosen.push_back(patterns[a]);
    }
    Rng rng({seed, kInitStream});
    fill_distinct(patterns, chosen, units - anchors.size(), rng);

    // chosen[k] goes to the k-th cell of the fill order.
    const auto order = anchor_fill_order(rows, cols);
    std::vector<std::optional<Sequence>> grid(units);
    for (std::size_t k = 0; k < units; ++k) grid[order[k]] = std::move(chosen[k]);
    std::vector<Sequence> placed;
    placed.reserve(units);
    for (auto& g : grid) placed.push_back(std::move(*g));
    return SomNetwork(rows, cols, std::move(placed), TrainingConfig::defaults_for(rows, cols));
}

double neighborhood(const SomNetwork& net, std::size_t c, std::size_t i, double radius) {
    const auto a = net.cell(c);
    const auto b = net.cell(i);
    const double dr = static_cast<double>(a.row) - static_cast<double>(b.row);
    const double dc = static_cast<double>(a.col) - static_cast<double>(b.col);
    const double g2 = dr * dr + dc * dc;
    if (g2 == 0.0) return 1.0;
    return std::exp(-g2 / (2.0 * radius * radius));
}

BestMatch bmu(const SomNetwork& net, const Sequence& pattern) {
    std::vector<double> dist(net.size());
    parallel_for(net.size(), net.config().threads,
                 [&](std::size_t i) { dist[i] = dtw_distance(net.unit(i), pattern, net.config().window); });
    BestMatch best{0, dist[0]};
    for (std::size_t i = 1; i < dist.size(); ++i)
        if (dist[i] < best.distance) best = {i, dist[i]};
    return best;
}

Sequence adapt_unit(const Sequence& unit, const Sequence& pattern, const AlignmentPath& path, double strength) {
    const std::size_t d = unit.dims();
    std::vector<double> values(unit.values().begin(), unit.values().end());
    const auto groups = path_groups(path, unit.length());
    std::vector<double> mean(d);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& js = groups[i];
        if (js.empty()) continue;
        std::fill(mean.begin(), mean.end(), 0.0);
        for (std::size_t j : js)
            for (std::size_t k = 0; k < d; ++k) mean[k] += pattern.at(j, k);
        for (std::size_t k = 0; k < d; ++k) {
            mean[k] /= static_cast<double>(js.size());
            double& w = values[i * d + k];
            w += strength * (mean[k] - w);
        }
    }
    return Sequence(std::move(values), d, unit.id());
}

double train_epoch(SomNetwork& net, std::span<const Sequence> patterns, double learning_rate, double radius,
                   std::uint64_t seed) {
    check_patterns(patterns);
    if (patterns.front().dims() != net.dims())
        throw std::invalid_argument("pattern dimension does not match the network");
    std::vector<std::size_t> order(patterns.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng({seed, kEpochStream});
    rng.shuffle(std::span<std::size_t>(order));

    const auto window = net.config().window;
    const std::size_t threads = net.config().threads;
    double total = 0.0;
    std::vector<std::size_t> targets;
    std::vector<double> strength;
    std::vector<std::optional<Sequence>> updated(net.size());
    for (std::size_t idx : order) {
        const Sequence& x = patterns[idx];
        const BestMatch winner = bmu(net, x);
        total += winner.distance;

        targets.clear();
        strength.clear();
        for (std::size_t i = 0; i < net.size(); ++i) {
            const double h = neighborhood(net, winner.index, i, radius);
            if (h > kNeighbourCutoff) {
                targets.push_back(i);
                strength.push_back(learning_rate * h);
            }
        }
        parallel_for(targets.size(), threads, [&](std::size_t k) {
            const Sequence& w = net.unit(targets[k]);
            const auto aligned = dtw(w, x, window);
            updated[k] = adapt_unit(w, x, aligned.path, strength[k]);
        });
        for (std::size_t k = 0; k < targets.size(); ++k) net.set_unit(targets[k], std::move(*updated[k]));
    }
    return total / static_cast<double>(patterns.size());
}

double learning_rate_at(const TrainingConfig& config, std::size_t t) {
    const double frac = static_cast<double>(t) / static_cast<double>(config.epochs);
    return config.learning_rate * (1.0 - frac);
}

double radius_at(const TrainingConfig& config, std::size_t t) {
    const double frac = static_cast<double>(t) / static_cast<double>(config.epochs);
    return std::max(config.radius * (1.0 - frac), kRadiusFloor);
}

TrainingTrace train(SomNetwork& net, std::span<const Sequence> patterns) {
    const TrainingConfig& config = net.config();
    TrainingTrace trace;
    trace.initial_qe = quantization_error(net, patterns);
    for (std::size_t t = net.epoch(); t < config.epochs; ++t) {
        const double alpha = learning_rate_at(config, t);
        const double r = radius_at(config, t);
        // Each epoch draws its order from (seed, t) so resumed runs match.
        const double qe = train_epoch(net, patterns, alpha, r, config.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1)));
        trace.epoch_qe.push_back(qe);
        trace.learning_rate.push_back(alpha);
        trace.radius.push_back(r);
        net.set_epoch(t + 1);
    }
    trace.final_qe = quantization_error(net, patterns);
    return trace;
}

double quantization_error(const SomNetwork& net, std::span<const Sequence> patterns) {
    if (patterns.empty()) return 0.0;
    double total = 0.0;
    for (const auto& p : patterns) total += bmu(net, p).distance;
    return total / static_cast<double>(patterns.size());
}

} // namespace dtwsom
