#include "dtwsom/report.hpp"

#include "dtwsom/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <type_traits>

namespace dtwsom {

namespace {

constexpr int kCell = 64;
constexpr int kPanelW = 180;
constexpr int kPanelH = 120;
constexpr int kPad = 12;

constexpr std::array<const char*, 6> kLineColors{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    const int n = std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf, static_cast<std::size_t>(std::max(n, 0)));
}

std::string svg_open(int width, int height) {
    return fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
               width, height, width, height) +
           fmt("<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n", width, height);
}

std::string hex_rgb(int r, int g, int b) { return fmt("#%02x%02x%02x", r, g, b); }

std::string cell_rect(std::size_t r, std::size_t c, const std::string& fill, const std::string& label,
                      bool dark) {
    const int x = static_cast<int>(c) * kCell;
    const int y = static_cast<int>(r) * kCell;
    return fmt("<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" stroke=\"#808080\"/>\n", x, y, kCell,
               kCell, fill.c_str()) +
           fmt("<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
               "fill=\"%s\">%s</text>\n",
               x + kCell / 2, y + kCell / 2 + 4, dark ? "#ffffff" : "#000000", label.c_str());
}

} // namespace

UMatrix u_matrix(const SomNetwork& net) {
    UMatrix u(net.rows(), net.cols(), 0.0);
    const auto window = net.config().window;
    for (std::size_t r = 0; r < net.rows(); ++r) {
        for (std::size_t c = 0; c < net.cols(); ++c) {
            const Sequence& unit = net.unit(net.index({r, c}));
            double sum = 0.0;
            int n = 0;
            auto visit = [&](std::size_t rr, std::size_t cc) {
                sum += dtw_distance(unit, net.unit(net.index({rr, cc})), window);
                ++n;
            };
            if (r > 0) visit(r - 1, c);
            if (r + 1 < net.rows()) visit(r + 1, c);
            if (c > 0) visit(r, c - 1);
            if (c + 1 < net.cols()) visit(r, c + 1);
            u(r, c) = n == 0 ? 0.0 : sum / n;
        }
    }
    return u;
}

WinnerMatrix winner_matrix(const SomNetwork& net, std::span<const Sequence> patterns) {
    WinnerMatrix w(net.rows(), net.cols(), 0);
    for (const auto& p : patterns) ++w.values[bmu(net, p).index];
    return w;
}

int grey_level(double v, double lo, double hi) {
    if (!(hi > lo)) return 128;
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    return static_cast<int>(std::lround(255.0 * (1.0 - t)));
}

std::string u_matrix_svg(const UMatrix& u) {
    const auto [lo_it, hi_it] = std::minmax_element(u.values.begin(), u.values.end());
    const double lo = u.values.empty() ? 0.0 : *lo_it;
    const double hi = u.values.empty() ? 0.0 : *hi_it;
    std::string out = svg_open(static_cast<int>(u.cols) * kCell, static_cast<int>(u.rows) * kCell);
    for (std::size_t r = 0; r < u.rows; ++r)
        for (std::size_t c = 0; c < u.cols; ++c) {
            const int g = grey_level(u(r, c), lo, hi);
            out += cell_rect(r, c, hex_rgb(g, g, g), fmt("%.3f", u(r, c)), g < 128);
        }
    out += "</svg>\n";
    return out;
}

std::string winner_matrix_svg(const WinnerMatrix& w) {
    const std::size_t hi = w.values.empty() ? 0 : *std::max_element(w.values.begin(), w.values.end());
    std::string out = svg_open(static_cast<int>(w.cols) * kCell, static_cast<int>(w.rows) * kCell);
    // White (no wins) to dark blue (most wins).
    for (std::size_t r = 0; r < w.rows; ++r)
        for (std::size_t c = 0; c < w.cols; ++c) {
            const double t = hi == 0 ? 0.0 : static_cast<double>(w(r, c)) / static_cast<double>(hi);
            const auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
            out += cell_rect(r, c, hex_rgb(mix(247, 8), mix(251, 48), mix(255, 107)), std::to_string(w(r, c)),
                             t > 0.5);
        }
    out += "</svg>\n";
    return out;
}

std::string units_svg(const SomNetwork& net) {
    double lo = net.unit(0).values()[0];
    double hi = lo;
    for (const auto& u : net.units())
        for (double v : u.values()) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const int width = static_cast<int>(net.cols()) * kPanelW;
    const int height = static_cast<int>(net.rows()) * kPanelH;
    std::string out = svg_open(width, height);
    for (std::size_t i = 0; i < net.size(); ++i) {
        const auto cell = net.cell(i);
        const int x0 = static_cast<int>(cell.col) * kPanelW;
        const int y0 = static_cast<int>(cell.row) * kPanelH;
        out += fmt("<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"none\" stroke=\"#c0c0c0\"/>\n", x0, y0,
                   kPanelW, kPanelH);
        out += fmt("<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"10\">unit %zu</text>\n", x0 + 4,
                   y0 + 11, i);
        const Sequence& u = net.unit(i);
        const double plot_w = kPanelW - 2 * kPad;
        const double plot_h = kPanelH - 2 * kPad - 6;
        for (std::size_t k = 0; k < u.dims(); ++k) {
            std::string points;
            for (std::size_t t = 0; t < u.length(); ++t) {
                const double fx = u.length() == 1 ? 0.5 : static_cast<double>(t) / static_cast<double>(u.length() - 1);
                const double fy = (u.at(t, k) - lo) / (hi - lo);
                if (!points.empty()) points += ' ';
                points += fmt("%.2f,%.2f", x0 + kPad + fx * plot_w, y0 + kPad + 6 + (1.0 - fy) * plot_h);
            }
            out += fmt("<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.2\" points=\"", kLineColors[k % kLineColors.size()]) +
                   points + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

template <typename T>
std::string grid_csv(const Grid<T>& g) {
    std::string out;
    for (std::size_t r = 0; r < g.rows; ++r) {
        for (std::size_t c = 0; c < g.cols; ++c) {
            if (c > 0) out += ',';
            if constexpr (std::is_floating_point_v<T>)
                out += format_double(g(r, c));
            else
                out += std::to_string(g(r, c));
        }
        out += '\n';
    }
    return out;
}

template std::string grid_csv<double>(const Grid<double>&);
template std::string grid_csv<std::size_t>(const Grid<std::size_t>&);

Grid<double> read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    Grid<double> g;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto v = parse_double(tok);
            if (!v) throw DataError(path.string() + " row " + std::to_string(row) + ": bad value '" + tok + "'");
            vals.push_back(*v);
        }
        if (g.rows == 0) g.cols = vals.size();
        if (vals.size() != g.cols) throw DataError(path.string() + " row " + std::to_string(row) + ": ragged row");
        g.values.insert(g.values.end(), vals.begin(), vals.end());
        ++g.rows;
    }
    return g;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write '" + path.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("failed writing '" + path.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DataError("cannot write '" + path.string() + "'");
    }
}

std::vector<std::filesystem::path> render(const SomNetwork& net, const UMatrix& u, const WinnerMatrix& winners,
                                          const std::filesystem::path& out_dir) {
    if (u.rows != net.rows() || u.cols != net.cols() || winners.rows != net.rows() || winners.cols != net.cols())
        throw DataError("report grids do not match the network shape");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw DataError("cannot create output directory '" + out_dir.string() + "'");

    const std::vector<std::pair<std::string, std::string>> files{
        {"u_matrix.svg", u_matrix_svg(u)},
        {"winner_matrix.svg", winner_matrix_svg(winners)},
        {"units.svg", units_svg(net)},
        {"u_matrix.csv", grid_csv(u)},
        {"winner_matrix.csv", grid_csv(winners)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, content] : files) {
        write_file(out_dir / name, content);
        written.push_back(out_dir / name);
    }
    return written;
}

} // namespace dtwsom
