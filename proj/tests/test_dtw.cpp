#include <catch_amalgamated.hpp>

#include "dtwsom/dtw.hpp"
#include "oracles.hpp"

#include <random>

using dtwsom::AlignmentPath;
using dtwsom::dtw;
using dtwsom::dtw_distance;
using dtwsom::path_groups;
using dtwsom::Sequence;

TEST_CASE("identical sequences align on the diagonal", "[dtw]") {
    const auto a = Sequence::univariate({0, 1, 2});
    const auto r = dtw(a, a);
    REQUIRE(r.distance == 0.0);
    REQUIRE(r.path == AlignmentPath{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("zero-cost alignment by duplicating a point", "[dtw]") {
    const auto r = dtw(Sequence::univariate({1, 2, 3}), Sequence::univariate({1, 2, 2, 3}));
    REQUIRE(r.distance == 0.0);
    REQUIRE(r.path == AlignmentPath{{0, 0}, {1, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("lockstep distance with a zero window", "[dtw]") {
    const auto a = Sequence::univariate({1, 2, 3});
    const auto b = Sequence::univariate({2, 2, 4});
    REQUIRE(dtw(a, b, 0).distance == Catch::Approx(std::sqrt(2.0)));
    // Unconstrained DTW can do no worse than lockstep.
    REQUIRE(dtw(a, b).distance <= dtw(a, b, 0).distance);
}

TEST_CASE("multi-dimensional local cost is squared Euclidean", "[dtw]") {
    const Sequence a({0, 0}, 2);
    const Sequence b({3, 4}, 2);
    REQUIRE(dtw(a, b).distance == Catch::Approx(5.0));
}

TEST_CASE("dtw errors", "[dtw]") {
    const auto a = Sequence::univariate({1, 2, 3});
    const auto b = Sequence::univariate({1, 2, 3, 4, 5});
    REQUIRE_THROWS_AS(dtw(a, b, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(dtw_distance(a, b, 1), std::invalid_argument);
    REQUIRE_NOTHROW(dtw(a, b, 2));
    REQUIRE_THROWS_AS(dtw(a, Sequence({1, 2}, 2)), std::invalid_argument);
}

TEST_CASE("dtw matches the textbook oracle on random pairs", "[dtw][oracle]") {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<std::size_t> len(1, 20), dims(1, 3);
    const std::optional<std::size_t> windows[] = {std::nullopt, 0, 2, 5};
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = dims(gen);
        const auto a = oracle::random_sequence(gen, len(gen), d);
        const auto b = oracle::random_sequence(gen, len(gen), d);
        const std::size_t gap = a.length() > b.length() ? a.length() - b.length() : b.length() - a.length();
        for (auto w : windows) {
            if (w && *w < gap) continue;
            const auto r = dtw(a, b, w);
            const double expected = oracle::dtw(a, b, w);
            REQUIRE(r.distance == Catch::Approx(expected).margin(1e-12));
            REQUIRE(dtw_distance(a, b, w) == r.distance);
            REQUIRE(oracle::path_ok(r.path, a.length(), b.length()));
            REQUIRE(dtwsom::is_valid_path(r.path, a.length(), b.length()));
            REQUIRE(std::sqrt(oracle::path_cost(r.path, a, b)) == Catch::Approx(r.distance).margin(1e-12));
            for (const auto& [i, j] : r.path) REQUIRE(dtwsom::in_band(i, j, a.length(), b.length(), w));
            ++checked;
        }
    }
    REQUIRE(checked >= 1000);
}

TEST_CASE("dtw properties", "[dtw][property]") {
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<std::size_t> len(1, 25), dims(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = dims(gen);
        const auto a = oracle::random_sequence(gen, len(gen), d);
        const auto b = oracle::random_sequence(gen, len(gen), d);
        REQUIRE(dtw(a, a).distance == 0.0);
        REQUIRE(dtw(a, b).distance == dtw(b, a).distance);

        // Shift invariance.
        std::vector<double> sa(a.values().begin(), a.values().end()), sb(b.values().begin(), b.values().end());
        for (std::size_t i = 0; i < sa.size(); ++i) sa[i] += 10.0 + static_cast<double>(i % d);
        for (std::size_t i = 0; i < sb.size(); ++i) sb[i] += 10.0 + static_cast<double>(i % d);
        REQUIRE(dtw(Sequence(sa, d), Sequence(sb, d)).distance == Catch::Approx(dtw(a, b).distance).margin(1e-9));

        // Equal lengths: window symmetry and lockstep at window 0.
        const auto c = oracle::random_sequence(gen, a.length(), d);
        REQUIRE(dtw(a, c, 3).distance == dtw(c, a, 3).distance);
        double lockstep = 0.0;
        for (std::size_t i = 0; i < a.length(); ++i) lockstep += oracle::point_cost(a, i, c, i);
        REQUIRE(dtw(a, c, 0).distance == Catch::Approx(std::sqrt(lockstep)).margin(1e-12));
    }
}

TEST_CASE("tie-break prefers diagonal, then unit step, then pattern step", "[dtw]") {
    // Every alignment of constant sequences costs zero, so the path is decided
    // by the tie rule alone.
    const auto unit = Sequence::univariate({1, 1, 1});
    const auto pattern = Sequence::univariate({1, 1, 1, 1, 1});
    const auto r = dtw(unit, pattern);
    REQUIRE(r.path == AlignmentPath{{0, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 4}});
    const auto back = dtw(pattern, unit);
    REQUIRE(back.path == AlignmentPath{{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 2}});
}

TEST_CASE("path_groups", "[dtw][groups]") {
    SECTION("diagonal gives singletons") {
        const auto g = path_groups({{0, 0}, {1, 1}, {2, 2}}, 3);
        REQUIRE(g == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    }
    SECTION("multi-match regrouping") {
        const auto g = path_groups({{0, 0}, {1, 1}, {1, 2}, {2, 3}}, 3);
        REQUIRE(g == std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {3}});
    }
    SECTION("groups of random paths cover the pattern in order") {
        std::mt19937_64 gen(9);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = oracle::random_sequence(gen, 1 + gen() % 15, 1);
            const auto b = oracle::random_sequence(gen, 1 + gen() % 15, 1);
            const auto g = path_groups(dtw(a, b).path, a.length());
            std::vector<std::size_t> flat;
            for (const auto& grp : g) {
                REQUIRE_FALSE(grp.empty());
                for (std::size_t k = 1; k < grp.size(); ++k) REQUIRE(grp[k] == grp[k - 1] + 1);
                flat.insert(flat.end(), grp.begin(), grp.end());
            }
            REQUIRE(std::is_sorted(flat.begin(), flat.end()));
            REQUIRE(flat.front() == 0);
            REQUIRE(flat.back() == b.length() - 1);
            for (std::size_t k = 1; k < flat.size(); ++k) REQUIRE(flat[k] - flat[k - 1] <= 1);
        }
    }
}
