#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + DTWSOM_CLI + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "dtwsom_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

const std::string kGunPoint = std::string(DTWSOM_DATA_DIR) + "/GunPoint/GunPoint_TRAIN.tsv";

} // namespace

TEST_CASE("synth, train and report succeed", "[cli]") {
    const auto d = workdir() / "pipeline";
    fs::create_directories(d);
    REQUIRE(run("synth --count 30 --seed 4 --out " + q(d / "s.json")) == 0);
    REQUIRE(run("train --motifs " + q(d / "s.json") + " --epochs 3 --init anchor --anchors 0,1,2 --seed 2 --out " +
                q(d / "m.json")) == 0);
    REQUIRE(run("report --model " + q(d / "m.json") + " --motifs " + q(d / "s.json") + " --out-dir " + q(d / "r")) ==
            0);
    for (const char* f : {"u_matrix.svg", "winner_matrix.svg", "units.svg", "u_matrix.csv", "winner_matrix.csv"})
        REQUIRE(fs::exists(d / "r" / f));
}

TEST_CASE("extract succeeds on GunPoint", "[cli]") {
    const auto d = workdir() / "extract";
    fs::create_directories(d);
    REQUIRE(run("extract --input " + q(kGunPoint) + " --window 25 --max-motifs 5 --out " + q(d / "g.json")) == 0);
    REQUIRE(slurp(d / "g.json").find("\"rank\": 5") != std::string::npos);
}

TEST_CASE("usage errors exit 1 and write nothing", "[cli]") {
    const auto d = workdir() / "usage";
    fs::create_directories(d);
    REQUIRE(run("synth --count 10 --out " + q(d / "s.json")) == 0);
    const auto out = d / "never.json";
    REQUIRE(run("") == 1);
    REQUIRE(run("bogus") == 1);
    REQUIRE(run("synth --count 0 --out " + q(out)) == 1);
    REQUIRE(run("synth --count 3 --unknown 1 --out " + q(out)) == 1);
    REQUIRE(run("synth --count abc --out " + q(out)) == 1);
    REQUIRE(run("extract --input " + q(kGunPoint) + " --window 0 --out " + q(out)) == 1);
    const auto train = "train --motifs " + q(d / "s.json") + " --out " + q(out) + " ";
    REQUIRE(run(train + "--learning-rate 1.5") == 1);
    REQUIRE(run(train + "--learning-rate 0") == 1);
    REQUIRE(run(train + "--radius 0") == 1);
    REQUIRE(run(train + "--radius 4") == 1);
    REQUIRE(run(train + "--epochs 0") == 1);
    REQUIRE(run(train + "--init sideways") == 1);
    REQUIRE(run(train + "--init anchor") == 1);
    REQUIRE(run(train + "--anchors 0,1") == 1);
    REQUIRE(run(train + "--init anchor --anchors 0,1,2,3,4,5,6,7,8,9") == 1);
    REQUIRE_FALSE(fs::exists(out));
}

TEST_CASE("data errors exit 2 and write nothing", "[cli]") {
    const auto d = workdir() / "data";
    fs::create_directories(d);
    const auto out = d / "never.json";
    std::ofstream(d / "ragged.tsv") << "1\t1\t2\t3\n2\t1\n";
    std::ofstream(d / "junk.json") << "{ nope";
    REQUIRE(run("extract --input " + q(d / "missing.tsv") + " --window 5 --out " + q(out)) == 2);
    REQUIRE(run("extract --input " + q(d / "ragged.tsv") + " --window 1 --out " + q(out)) == 2);
    REQUIRE(run("extract --input " + q(kGunPoint) + " --window 5000 --out " + q(out)) == 2);
    REQUIRE(run("extract --input " + q(kGunPoint) + " --window 10 --exclude 1,2 --out " + q(out)) == 2);
    REQUIRE(run("extract --input " + q(kGunPoint) + " --window 10 --sample 60 --out " + q(out)) == 2);
    REQUIRE(run("train --motifs " + q(d / "junk.json") + " --out " + q(out)) == 2);
    REQUIRE(run("report --model " + q(d / "junk.json") + " --motifs " + q(d / "junk.json") + " --out-dir " +
                q(d / "rep")) == 2);
    REQUIRE_FALSE(fs::exists(out));
    REQUIRE_FALSE(fs::exists(d / "rep"));
}

TEST_CASE("runs are byte-identical", "[cli]") {
    const auto d = workdir() / "repeat";
    fs::create_directories(d);
    for (const char* tag : {"a", "b"}) {
        const std::string t(tag);
        REQUIRE(run("synth --count 24 --seed 9 --out " + q(d / (t + "_s.json"))) == 0);
        REQUIRE(run("train --motifs " + q(d / (t + "_s.json")) + " --rows 2 --cols 2 --epochs 2 --seed 5 --threads " +
                    (t == "a" ? "1" : "3") + " --out " + q(d / (t + "_m.json"))) == 0);
    }
    REQUIRE(slurp(d / "a_s.json") == slurp(d / "b_s.json"));
    REQUIRE(slurp(d / "a_m.json") == slurp(d / "b_m.json"));
}
