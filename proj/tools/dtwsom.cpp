// dtwsom: synthetic motif generation, matrix-profile motif extraction,
// DTW-SOM training and report emission.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "dtwsom/io.hpp"
#include "dtwsom/motif.hpp"
#include "dtwsom/report.hpp"
#include "dtwsom/som.hpp"
#include "dtwsom/synthgen.hpp"
#include "dtwsom/ucr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SynthArgs {
    std::size_t count = 180;
    std::uint64_t seed = 0;
    std::string out;
};

struct ExtractArgs {
    std::string input;
    std::size_t window = 0;
    std::size_t max_motifs = 1000;
    std::vector<std::string> exclude;
    std::optional<std::size_t> sample;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::string out;
};

struct TrainArgs {
    std::string motifs;
    std::size_t rows = 3;
    std::size_t cols = 3;
    std::size_t epochs = 30;
    std::string init = "random";
    std::vector<std::size_t> anchors;
    std::optional<std::size_t> anchor_count;
    double learning_rate = 0.1;
    std::optional<double> radius;
    std::optional<std::size_t> window;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::string out;
};

struct ReportArgs {
    std::string model;
    std::string motifs;
    std::string out_dir;
    std::size_t threads = 0;
};

int run_synth(const SynthArgs& a) {
    if (a.count == 0) throw UsageError("--count must be at least 1");
    const auto centers = dtwsom::synth::generate(a.count, a.seed);
    dtwsom::write_file(a.out, dtwsom::dump_motifs(dtwsom::to_document(centers)));
    std::cout << "wrote " << centers.size() << " synthetic centers to " << a.out << "\n";
    return 0;
}

int run_extract(const ExtractArgs& a) {
    if (a.window == 0) throw UsageError("--window must be at least 1");
    if (a.sample && *a.sample == 0) throw UsageError("--sample must be at least 1");
    const auto dataset = dtwsom::ucr::load(a.input);
    const std::set<std::string> exclude(a.exclude.begin(), a.exclude.end());
    const auto series = dtwsom::ucr::prepare(dataset, exclude, a.sample, a.seed);
    if (series.length() < 2 * a.window)
        throw dtwsom::DataError("series of length " + std::to_string(series.length()) +
                                " is too short for window " + std::to_string(a.window));
    const auto set = dtwsom::extract_motifs(series, a.window, a.max_motifs, a.threads);
    dtwsom::write_file(a.out, dtwsom::dump_motifs(dtwsom::to_document(set, dataset.source)));
    std::cout << "extracted " << set.motifs.size() << " motifs from " << series.length() << " points to " << a.out
              << "\n";
    return 0;
}

int run_train(TrainArgs a) {
    if (a.rows == 0 || a.cols == 0) throw UsageError("--rows and --cols must be at least 1");
    if (a.epochs == 0) throw UsageError("--epochs must be at least 1");
    if (!(a.learning_rate > 0.0 && a.learning_rate < 1.0)) throw UsageError("--learning-rate must lie in (0, 1)");
    const double max_side = static_cast<double>(std::max(a.rows, a.cols));
    const double radius = a.radius.value_or(dtwsom::TrainingConfig::defaults_for(a.rows, a.cols).radius);
    if (!(radius > 0.0) || radius > max_side) throw UsageError("--radius must lie in (0, max(rows, cols)]");
    const bool anchored = a.init == "anchor";
    if (!anchored && (!a.anchors.empty() || a.anchor_count))
        throw UsageError("--anchors/--anchor-count require --init anchor");
    if (!a.anchors.empty() && a.anchor_count) throw UsageError("use either --anchors or --anchor-count, not both");
    if (anchored && a.anchors.empty() && !a.anchor_count)
        throw UsageError("--init anchor needs --anchors or --anchor-count");
    const std::size_t n_anchors = a.anchor_count ? *a.anchor_count : a.anchors.size();
    if (n_anchors > a.rows * a.cols) throw UsageError("more anchors than units");

    const auto doc = dtwsom::load_motifs(a.motifs);
    const auto patterns = doc.centers();
    if (patterns.empty()) throw dtwsom::DataError("motif document holds no centers");
    if (a.anchor_count) {
        // Records are stored in rank order, so the first k are the most significant.
        if (*a.anchor_count > patterns.size()) throw dtwsom::DataError("fewer motifs than requested anchors");
        a.anchors.resize(*a.anchor_count);
        for (std::size_t k = 0; k < *a.anchor_count; ++k) a.anchors[k] = k;
    }

    auto net = anchored ? dtwsom::init_anchor(patterns, a.anchors, a.rows, a.cols, a.seed)
                        : dtwsom::init_random_sample(patterns, a.rows, a.cols, a.seed);
    dtwsom::TrainingConfig config;
    config.epochs = a.epochs;
    config.learning_rate = a.learning_rate;
    config.radius = radius;
    config.window = a.window;
    config.seed = a.seed;
    config.threads = a.threads;
    net.set_config(config);
    const auto trace = dtwsom::train(net, patterns);
    dtwsom::write_file(a.out, dtwsom::dump_model(net, &trace));
    std::cout << "trained " << a.rows << "x" << a.cols << " for " << a.epochs << " epochs, QE "
              << trace.initial_qe << " -> " << trace.final_qe << ", model at " << a.out << "\n";
    return 0;
}

int run_report(const ReportArgs& a) {
    auto net = dtwsom::load_model(a.model);
    auto config = net.config();
    config.threads = a.threads;
    net.set_config(config);
    const auto patterns = dtwsom::load_motifs(a.motifs).centers();
    if (!patterns.empty() && patterns.front().dims() != net.dims())
        throw dtwsom::DataError("motif dimension does not match the model");
    const auto u = dtwsom::u_matrix(net);
    const auto w = dtwsom::winner_matrix(net, patterns);
    const auto files = dtwsom::render(net, u, w, a.out_dir);
    std::cout << "wrote " << files.size() << " files to " << a.out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DTW-SOM: explore time-series motifs with a DTW self-organizing map"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto* s = app.add_subcommand("synth", "Generate the three-cluster synthetic motif-center set");
    s->add_option("--count", synth.count, "Number of centers")->capture_default_str();
    s->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
    s->add_option("--out", synth.out, "Output motif document (JSON)")->required();

    ExtractArgs extract;
    auto* e = app.add_subcommand("extract", "Matrix-profile motif extraction from a UCR file");
    e->add_option("--input", extract.input, "UCR text file (tab or comma separated)")->required();
    e->add_option("--window", extract.window, "Motif length m")->required();
    e->add_option("--max-motifs", extract.max_motifs, "Maximum motifs K")->capture_default_str();
    e->add_option("--exclude", extract.exclude, "Class labels to drop")->delimiter(',');
    e->add_option("--sample", extract.sample, "Sample this many series before concatenating");
    e->add_option("--seed", extract.seed, "Random seed")->capture_default_str();
    e->add_option("--threads", extract.threads, "Worker threads, 0 = all cores")->capture_default_str();
    e->add_option("--out", extract.out, "Output motif document (JSON)")->required();

    TrainArgs train;
    auto* t = app.add_subcommand("train", "Train a DTW-SOM on a motif document");
    t->add_option("--motifs", train.motifs, "Motif document (JSON)")->required();
    t->add_option("--rows", train.rows, "Grid rows")->capture_default_str();
    t->add_option("--cols", train.cols, "Grid columns")->capture_default_str();
    t->add_option("--epochs", train.epochs, "Training epochs")->capture_default_str();
    t->add_option("--init", train.init, "Initialization: random or anchor")
        ->check(CLI::IsMember({"random", "anchor"}))
        ->capture_default_str();
    t->add_option("--anchors", train.anchors, "Anchor motif indices, most significant first")->delimiter(',');
    t->add_option("--anchor-count", train.anchor_count, "Use the first k motifs as anchors");
    t->add_option("--learning-rate", train.learning_rate, "Initial learning rate")->capture_default_str();
    t->add_option("--radius", train.radius, "Initial neighbourhood radius in grid units (default 0.3)");
    t->add_option("--window", train.window, "DTW maximum warping window");
    t->add_option("--seed", train.seed, "Random seed")->capture_default_str();
    t->add_option("--threads", train.threads, "Worker threads, 0 = all cores")->capture_default_str();
    t->add_option("--out", train.out, "Output model document (JSON)")->required();

    ReportArgs report;
    auto* r = app.add_subcommand("report", "Emit U-matrix, winner matrix and unit plots");
    r->add_option("--model", report.model, "Model document (JSON)")->required();
    r->add_option("--motifs", report.motifs, "Motif document used for the winner matrix")->required();
    r->add_option("--out-dir", report.out_dir, "Output directory")->required();
    r->add_option("--threads", report.threads, "Worker threads, 0 = all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cerr << "dtwsom: " << ex.what() << "\n";
        return kUsageError;
    }

    try {
        if (s->parsed()) return run_synth(synth);
        if (e->parsed()) return run_extract(extract);
        if (t->parsed()) return run_train(train);
        if (r->parsed()) return run_report(report);
    } catch (const UsageError& ex) {
        std::cerr << "dtwsom: " << ex.what() << "\n";
        return kUsageError;
    } catch (const std::exception& ex) {
        std::cerr << "dtwsom: " << ex.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}
