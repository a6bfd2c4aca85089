#ifndef DTWSOM_REPORT_HPP
#define DTWSOM_REPORT_HPP

#include "dtwsom/som.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dtwsom {

template <typename T>
struct Grid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> values; // row-major

    Grid() = default;
    Grid(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), values(r * c, fill) {}

    T& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

using UMatrix = Grid<double>;
using WinnerMatrix = Grid<std::size_t>;

/// Mean DTW distance (network window) from each unit to its up/down/left/right
/// neighbours. A 1x1 grid yields 0.
UMatrix u_matrix(const SomNetwork& net);

/// BMU counts per unit.
WinnerMatrix winner_matrix(const SomNetwork& net, std::span<const Sequence> patterns);

/// Grey level in [0, 255] for value v on [lo, hi]: hi is black, lo white, and
/// a degenerate range gives mid grey.
int grey_level(double v, double lo, double hi);

std::string u_matrix_svg(const UMatrix& u);
std::string winner_matrix_svg(const WinnerMatrix& w);
/// Small multiples: one line plot per unit, laid out like the grid.
std::string units_svg(const SomNetwork& net);

template <typename T>
std::string grid_csv(const Grid<T>& g);

/// Parses a grid written by grid_csv. Throws DataError on malformed input.
Grid<double> read_grid_csv(const std::filesystem::path& path);

/// Writes u_matrix.svg, winner_matrix.svg, units.svg, u_matrix.csv and
/// winner_matrix.csv into out_dir (created if missing) and returns their
/// paths. Throws DataError if the directory cannot be written or shapes
/// disagree with the network.
std::vector<std::filesystem::path> render(const SomNetwork& net, const UMatrix& u, const WinnerMatrix& winners,
                                          const std::filesystem::path& out_dir);

/// Writes text to path through a temporary sibling and a rename.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace dtwsom

#endif
