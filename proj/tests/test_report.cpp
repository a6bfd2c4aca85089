#include <catch_amalgamated.hpp>

#include "dtwsom/report.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace dtwsom;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("dtwsom_report_" + name);
    fs::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("u-matrix examples", "[report][umatrix]") {
    SECTION("single unit") {
        const SomNetwork net(1, 1, {Sequence::univariate({1, 2})});
        const auto u = u_matrix(net);
        REQUIRE(u.values == std::vector<double>{0.0});
    }
    SECTION("identical units") {
        const SomNetwork net(2, 2, std::vector<Sequence>(4, Sequence::univariate({1, 2, 3})));
        for (double v : u_matrix(net).values) REQUIRE(v == 0.0);
    }
    SECTION("1x2 grid") {
        const SomNetwork net(1, 2, {Sequence::univariate({0}), Sequence::univariate({3})});
        const auto u = u_matrix(net);
        REQUIRE(u(0, 0) == 3.0);
        REQUIRE(u(0, 1) == 3.0);
    }
}

TEST_CASE("u-matrix matches a direct neighbour average", "[report][umatrix][oracle]") {
    std::mt19937_64 gen(12);
    std::vector<Sequence> units;
    for (int i = 0; i < 12; ++i) units.push_back(oracle::random_sequence(gen, 3 + gen() % 8, 2));
    const SomNetwork net(3, 4, units);
    const auto u = u_matrix(net);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double sum = 0.0;
            int n = 0;
            const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
            for (int k = 0; k < 4; ++k) {
                const long rr = static_cast<long>(r) + dr[k], cc = static_cast<long>(c) + dc[k];
                if (rr < 0 || cc < 0 || rr >= 3 || cc >= 4) continue;
                sum += oracle::dtw(units[r * 4 + c], units[static_cast<std::size_t>(rr * 4 + cc)]);
                ++n;
            }
            REQUIRE(u(r, c) == Catch::Approx(sum / n).margin(1e-12));
        }
}

TEST_CASE("winner counts sum to the pattern count", "[report][winners]") {
    std::mt19937_64 gen(13);
    std::vector<Sequence> units, patterns;
    for (int i = 0; i < 6; ++i) units.push_back(oracle::random_sequence(gen, 5, 1));
    for (int i = 0; i < 37; ++i) patterns.push_back(oracle::random_sequence(gen, 4 + gen() % 5, 1));
    const SomNetwork net(2, 3, units);
    const auto w = winner_matrix(net, patterns);
    std::size_t total = 0;
    for (auto v : w.values) total += v;
    REQUIRE(total == 37);
    REQUIRE(w(0, 0) + w(1, 2) <= 37);
    const auto again = winner_matrix(net, std::vector<Sequence>{units[4]});
    REQUIRE(again(1, 1) == 1);
}

TEST_CASE("grey level mapping", "[report][grey]") {
    REQUIRE(grey_level(5.0, 1.0, 5.0) == 0);
    REQUIRE(grey_level(1.0, 1.0, 5.0) == 255);
    REQUIRE(grey_level(2.0, 2.0, 2.0) == 128);
    int previous = 256;
    for (double v = 0.0; v <= 10.0; v += 0.25) {
        const int g = grey_level(v, 0.0, 10.0);
        REQUIRE(g <= previous);
        previous = g;
    }
}

TEST_CASE("constant u-matrix renders one uniform grey", "[report][svg]") {
    UMatrix u(2, 2, 1.5);
    const auto svg = u_matrix_svg(u);
    const std::string grey_cell = "fill=\"#808080\" stroke=\"#808080\"";
    std::size_t cells = 0;
    for (auto pos = svg.find(grey_cell); pos != std::string::npos; pos = svg.find(grey_cell, pos + 1)) ++cells;
    REQUIRE(cells == 4);
}

TEST_CASE("render writes every artefact", "[report][render]") {
    std::mt19937_64 gen(14);
    std::vector<Sequence> units, patterns;
    for (int i = 0; i < 4; ++i) units.push_back(oracle::random_sequence(gen, 6, 1));
    for (int i = 0; i < 10; ++i) patterns.push_back(oracle::random_sequence(gen, 6, 1));
    const SomNetwork net(2, 2, units);
    const auto u = u_matrix(net);
    const auto w = winner_matrix(net, patterns);
    const auto dir = scratch("render") / "nested";
    const auto files = render(net, u, w, dir);
    REQUIRE(files.size() == 5);
    for (const char* name : {"u_matrix.svg", "winner_matrix.svg", "units.svg", "u_matrix.csv", "winner_matrix.csv"})
        REQUIRE(fs::file_size(dir / name) > 0);
    for (const auto& entry : fs::directory_iterator(dir)) REQUIRE(entry.path().extension() != ".tmp");

    const auto reread = read_grid_csv(dir / "u_matrix.csv");
    REQUIRE(reread.rows == 2);
    REQUIRE(reread.cols == 2);
    for (std::size_t k = 0; k < 4; ++k) REQUIRE(std::abs(reread.values[k] - u.values[k]) <= 1e-9);
    const auto winners = read_grid_csv(dir / "winner_matrix.csv");
    for (std::size_t k = 0; k < 4; ++k) REQUIRE(winners.values[k] == static_cast<double>(w.values[k]));

    // Rendering twice is byte-identical.
    const auto dir2 = scratch("render2");
    render(net, u, w, dir2);
    for (const char* name : {"u_matrix.svg", "winner_matrix.svg", "units.svg"}) {
        std::ifstream a(dir / name), b(dir2 / name);
        std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
        REQUIRE(sa == sb);
    }
}

TEST_CASE("render refuses an unusable directory or mismatched grids", "[report][render]") {
    const SomNetwork net(1, 2, {Sequence::univariate({0}), Sequence::univariate({1})});
    const auto u = u_matrix(net);
    const auto w = winner_matrix(net, std::vector<Sequence>{Sequence::univariate({0})});
    const auto base = scratch("blocked");
    fs::create_directories(base);
    std::ofstream(base / "file") << "x";
    REQUIRE_THROWS_AS(render(net, u, w, base / "file" / "out"), DataError);
    REQUIRE_THROWS_AS(render(net, UMatrix(2, 2), w, base / "ok"), DataError);
}

TEST_CASE("read_grid_csv rejects malformed grids", "[report]") {
    const auto dir = scratch("csv");
    fs::create_directories(dir);
    std::ofstream(dir / "bad.csv") << "1,2\n3\n";
    REQUIRE_THROWS_AS(read_grid_csv(dir / "bad.csv"), DataError);
    std::ofstream(dir / "junk.csv") << "1,zz\n";
    REQUIRE_THROWS_AS(read_grid_csv(dir / "junk.csv"), DataError);
}
