#include "dtwsom/motif.hpp"

#include "dtwsom/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dtwsom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Rolled dot products are recomputed from scratch this often along a diagonal.
constexpr std::size_t kRefreshEvery = 1024;

void check_series(const LongSeries& series, std::size_t window) {
    if (series.dims() != 1) throw std::invalid_argument("matrix profile needs a univariate series");
    if (window == 0) throw std::invalid_argument("motif window must be positive");
    if (series.length() < 2 * window)
        throw std::invalid_argument("series of length " + std::to_string(series.length()) +
                                    " is shorter than twice the window " + std::to_string(window));
}

bool better(double d, std::size_t j, double best_d, std::size_t best_j) {
    return d < best_d || (d == best_d && j < best_j);
}

} // namespace

WindowStats::WindowStats(const LongSeries& series, std::size_t window) : window_(window) {
    const auto raw = series.values().values();
    const std::size_t n = raw.size();
    const double global = std::accumulate(raw.begin(), raw.end(), 0.0) / static_cast<double>(n);
    x_.resize(n);
    for (std::size_t i = 0; i < n; ++i) x_[i] = raw[i] - global;

    const std::size_t count = n - window + 1;
    mean_.resize(count);
    sigma_.resize(count);
    flat_.resize(count);
    // Two-pass per window keeps the statistics exact enough for near-flat
    // windows; O(N m) is small next to the profile itself.
    for (std::size_t i = 0; i < count; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < window; ++k) s += x_[i + k];
        const double mu = s / static_cast<double>(window);
        double v = 0.0;
        for (std::size_t k = 0; k < window; ++k) {
            const double c = x_[i + k] - mu;
            v += c * c;
        }
        mean_[i] = mu;
        sigma_[i] = std::sqrt(v / static_cast<double>(window));
        flat_[i] = sigma_[i] < kFlatSigma;
    }
}

double WindowStats::dot(std::size_t i, std::size_t j) const noexcept {
    double q = 0.0;
    for (std::size_t k = 0; k < window_; ++k) q += x_[i + k] * x_[j + k];
    return q;
}

double WindowStats::distance_from_dot(std::size_t i, std::size_t j, double q) const noexcept {
    const auto m = static_cast<double>(window_);
    if (flat_[i] && flat_[j]) return 0.0;
    if (flat_[i] || flat_[j]) return std::sqrt(m);
    double corr = (q - m * mean_[i] * mean_[j]) / (m * sigma_[i] * sigma_[j]);
    corr = std::clamp(corr, -1.0, 1.0);
    return std::sqrt(2.0 * m * (1.0 - corr));
}

double WindowStats::distance(std::size_t i, std::size_t j) const noexcept {
    if (flat_[i] || flat_[j]) return distance_from_dot(i, j, 0.0);
    // Correlation of the centred windows, computed directly.
    double q = 0.0;
    for (std::size_t k = 0; k < window_; ++k) q += (x_[i + k] - mean_[i]) * (x_[j + k] - mean_[j]);
    const auto m = static_cast<double>(window_);
    const double corr = std::clamp(q / (m * sigma_[i] * sigma_[j]), -1.0, 1.0);
    return std::sqrt(2.0 * m * (1.0 - corr));
}

std::vector<double> WindowStats::distance_profile(std::size_t i) const {
    std::vector<double> out(count());
    for (std::size_t j = 0; j < count(); ++j) out[j] = distance(i, j);
    return out;
}

MatrixProfile matrix_profile(const LongSeries& series, std::size_t window, std::size_t threads) {
    check_series(series, window);
    const WindowStats stats(series, window);
    const std::size_t count = stats.count();
    const std::size_t zone = exclusion_zone_for(window);
    const std::size_t diagonals = count - zone; // offsets k = zone .. count-1

    struct Partial {
        std::vector<double> d;
        std::vector<std::size_t> j;
    };
    const std::size_t workers = std::min(resolve_threads(threads), diagonals);
    std::vector<Partial> partial(workers);
    // Interleaved diagonal assignment balances the shrinking diagonal lengths.
    parallel_for(workers, workers, [&](std::size_t w) {
        Partial& p = partial[w];
        p.d.assign(count, kInf);
        p.j.assign(count, 0);
        for (std::size_t k = zone + w; k < count; k += workers) {
            double q = stats.dot(0, k);
            for (std::size_t i = 0; i + k < count; ++i) {
                const std::size_t j = i + k;
                if (i > 0) q = i % kRefreshEvery == 0 ? stats.dot(i, j) : stats.roll_dot(i, j, q);
                const double d = stats.distance_from_dot(i, j, q);
                if (better(d, j, p.d[i], p.j[i])) {
                    p.d[i] = d;
                    p.j[i] = j;
                }
                if (better(d, i, p.d[j], p.j[j])) {
                    p.d[j] = d;
                    p.j[j] = i;
                }
            }
        }
    });

    MatrixProfile mp;
    mp.window = window;
    mp.exclusion_zone = zone;
    mp.distances.assign(count, kInf);
    mp.indices.assign(count, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < count; ++i)
            if (better(p.d[i], p.j[i], mp.distances[i], mp.indices[i])) {
                mp.distances[i] = p.d[i];
                mp.indices[i] = p.j[i];
            }
    // Rolled dot products drift; report the exact distance of the chosen pair.
    for (std::size_t i = 0; i < count; ++i) mp.distances[i] = stats.distance(i, mp.indices[i]);
    return mp;
}

MotifSet extract_motifs(const LongSeries& series, std::size_t window, std::size_t max_motifs, std::size_t threads) {
    MotifSet set;
    set.window = window;
    if (max_motifs == 0) return set;
    const MatrixProfile mp = matrix_profile(series, window, threads);
    const WindowStats stats(series, window);
    const std::size_t count = stats.count();
    const std::size_t zone = mp.exclusion_zone;
    const auto raw = series.values().values();

    std::vector<char> excluded(count, 0);
    auto exclude_around = [&](std::size_t c) {
        const std::size_t lo = c >= zone - 1 ? c - (zone - 1) : 0;
        const std::size_t hi = std::min(count - 1, c + zone - 1);
        for (std::size_t o = lo; o <= hi; ++o) excluded[o] = 1;
    };

    while (set.motifs.size() < max_motifs) {
        std::size_t center = count;
        for (std::size_t i = 0; i < count; ++i)
            if (!excluded[i] && (center == count || mp.distances[i] < mp.distances[center])) center = i;
        if (center == count) break;

        const double pair = mp.distances[center];
        const double radius = 2.0 * pair;
        const auto profile = stats.distance_profile(center);

        std::vector<std::size_t> candidates;
        for (std::size_t o = 0; o < count; ++o)
            if (o != center && !excluded[o] && profile[o] <= radius) candidates.push_back(o);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) { return profile[a] < profile[b]; });
        std::vector<std::size_t> members{center};
        for (std::size_t o : candidates) {
            const bool overlaps = std::any_of(members.begin(), members.end(), [&](std::size_t q) {
                return (o > q ? o - q : q - o) < window;
            });
            if (!overlaps) members.push_back(o);
        }

        const bool separated = std::all_of(set.motifs.begin(), set.motifs.end(), [&](const Motif& m) {
            return profile[m.center_offset] > 2.0 * radius;
        });
        for (std::size_t o : members) exclude_around(o);
        if (!separated) continue;

        Motif motif{Sequence::univariate(std::vector<double>(raw.begin() + static_cast<std::ptrdiff_t>(center),
                                                             raw.begin() + static_cast<std::ptrdiff_t>(center + window))),
                    center,
                    pair,
                    radius,
                    std::move(members),
                    set.motifs.size() + 1};
        motif.center.set_id("motif-" + std::to_string(motif.rank));
        set.motifs.push_back(std::move(motif));
    }
    return set;
}

std::vector<Sequence> motif_centers(const MotifSet& set) {
    std::vector<Sequence> out;
    out.reserve(set.motifs.size());
    for (const auto& m : set.motifs) out.push_back(m.center);
    return out;
}

} // namespace dtwsom
