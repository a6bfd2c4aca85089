#include "dtwsom/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dtwsom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Band {
    std::size_t lo;
    std::size_t hi; // inclusive
};

// Column range of row i inside the band, clipped to [0, len_b).
Band band_row(std::size_t i, std::size_t len_a, std::size_t len_b, std::optional<std::size_t> window) {
    if (!window) return {0, len_b - 1};
    const auto la = static_cast<long long>(len_a);
    const auto centre = static_cast<long long>(i) * static_cast<long long>(len_b);
    const auto reach = static_cast<long long>(*window) * la;
    // j*la >= centre - reach  and  j*la <= centre + reach
    const long long low_num = centre - reach;
    long long lo = low_num <= 0 ? 0 : (low_num + la - 1) / la;
    long long hi = (centre + reach) / la;
    hi = std::min<long long>(hi, static_cast<long long>(len_b) - 1);
    lo = std::max<long long>(lo, 0);
    if (lo > hi) return {1, 0};
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

void check_inputs(const Sequence& a, const Sequence& b, std::optional<std::size_t> window) {
    if (a.dims() != b.dims()) throw std::invalid_argument("dtw: sequences differ in dimension");
    const std::size_t gap = a.length() > b.length() ? a.length() - b.length() : b.length() - a.length();
    if (window && *window < gap)
        throw std::invalid_argument("dtw: window " + std::to_string(*window) +
                                    " is smaller than the length difference " + std::to_string(gap));
}

} // namespace

double squared_distance(std::span<const double> x, std::span<const double> y) noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        s += d * d;
    }
    return s;
}

DtwResult dtw(const Sequence& a, const Sequence& b, std::optional<std::size_t> window) {
    check_inputs(a, b, window);
    const std::size_t n = a.length();
    const std::size_t m = b.length();
    std::vector<double> cost(n * m, kInf);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return cost[i * m + j]; };

    for (std::size_t i = 0; i < n; ++i) {
        const Band band = band_row(i, n, m, window);
        for (std::size_t j = band.lo; j <= band.hi && j < m; ++j) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = kInf;
                if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1));
                if (i > 0) best = std::min(best, at(i - 1, j));
                if (j > 0) best = std::min(best, at(i, j - 1));
            }
            at(i, j) = best + squared_distance(a.point(i), b.point(j));
        }
    }
    if (!std::isfinite(at(n - 1, m - 1))) throw std::invalid_argument("dtw: warping band admits no path");

    DtwResult result;
    result.distance = std::sqrt(at(n - 1, m - 1));
    auto& path = result.path;
    path.reserve(n + m);
    std::size_t i = n - 1;
    std::size_t j = m - 1;
    path.emplace_back(i, j);
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = at(i - 1, j - 1);
            const double up = at(i - 1, j);
            const double left = at(i, j - 1);
            if (diag <= up && diag <= left) {
                --i;
                --j;
            } else if (up <= left) {
                --i;
            } else {
                --j;
            }
        }
        path.emplace_back(i, j);
    }
    std::reverse(path.begin(), path.end());
    return result;
}

double dtw_distance(const Sequence& a, const Sequence& b, std::optional<std::size_t> window) {
    check_inputs(a, b, window);
    const std::size_t n = a.length();
    const std::size_t m = b.length();
    std::vector<double> prev(m, kInf);
    std::vector<double> curr(m, kInf);
    for (std::size_t i = 0; i < n; ++i) {
        const Band band = band_row(i, n, m, window);
        std::fill(curr.begin(), curr.end(), kInf);
        for (std::size_t j = band.lo; j <= band.hi && j < m; ++j) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = kInf;
                if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
                if (i > 0) best = std::min(best, prev[j]);
                if (j > 0) best = std::min(best, curr[j - 1]);
            }
            curr[j] = best + squared_distance(a.point(i), b.point(j));
        }
        std::swap(prev, curr);
    }
    if (!std::isfinite(prev[m - 1])) throw std::invalid_argument("dtw: warping band admits no path");
    return std::sqrt(prev[m - 1]);
}

std::vector<std::vector<std::size_t>> path_groups(const AlignmentPath& path, std::size_t unit_len) {
    std::vector<std::vector<std::size_t>> groups(unit_len);
    for (const auto& [i, j] : path)
        if (i < unit_len) groups[i].push_back(j);
    return groups;
}

bool is_valid_path(const AlignmentPath& path, std::size_t len_a, std::size_t len_b) noexcept {
    if (path.empty() || len_a == 0 || len_b == 0) return false;
    if (path.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
    if (path.back() != std::pair<std::size_t, std::size_t>{len_a - 1, len_b - 1}) return false;
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto [pi, pj] = path[k - 1];
        const auto [ci, cj] = path[k];
        const std::size_t di = ci - pi;
        const std::size_t dj = cj - pj;
        if (ci < pi || cj < pj || di > 1 || dj > 1 || di + dj == 0) return false;
    }
    return true;
}

} // namespace dtwsom
