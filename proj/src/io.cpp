#include "dtwsom/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dtwsom {

using nlohmann::json;

namespace {

constexpr const char* kMotifFormat = "dtwsom.motifs/1";
constexpr const char* kModelFormat = "dtwsom.model/1";

json sequence_json(const Sequence& s) {
    return json{{"dims", s.dims()}, {"values", std::vector<double>(s.values().begin(), s.values().end())}};
}

Sequence sequence_from(const json& j) {
    return Sequence(j.at("values").get<std::vector<double>>(), j.at("dims").get<std::size_t>());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(std::string_view text, const char* format) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", std::string{}) != format)
        throw DataError(std::string("expected a '") + format + "' document");
    return doc;
}

// Maps json type errors and Sequence validation onto DataError.
template <typename Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("invalid document: ") + e.what());
    }
}

} // namespace

std::vector<Sequence> MotifDocument::centers() const {
    std::vector<Sequence> out;
    out.reserve(motifs.size());
    for (const auto& m : motifs) out.push_back(m.center);
    return out;
}

MotifDocument to_document(const MotifSet& set, std::string source) {
    MotifDocument doc;
    doc.source = std::move(source);
    doc.window = set.window;
    for (const auto& m : set.motifs)
        doc.motifs.push_back({m.center, m.rank, std::nullopt, m.center_offset, m.pair_distance, m.radius, m.members});
    return doc;
}

MotifDocument to_document(const std::vector<synth::LabeledCenter>& centers) {
    MotifDocument doc;
    doc.source = "synthetic";
    std::size_t rank = 0;
    for (const auto& c : centers)
        doc.motifs.push_back({c.center, ++rank, std::string(synth::kClusters[c.cluster].name), std::nullopt,
                              std::nullopt, std::nullopt, {}});
    return doc;
}

std::string dump_motifs(const MotifDocument& doc) {
    json motifs = json::array();
    for (const auto& m : doc.motifs) {
        json j = sequence_json(m.center);
        j["rank"] = m.rank;
        if (m.label) j["label"] = *m.label;
        if (m.center_offset) j["center_offset"] = *m.center_offset;
        if (m.pair_distance) j["pair_distance"] = *m.pair_distance;
        if (m.radius) j["radius"] = *m.radius;
        if (!m.members.empty()) j["members"] = m.members;
        motifs.push_back(std::move(j));
    }
    json out{{"format", kMotifFormat}, {"source", doc.source}, {"motifs", std::move(motifs)}};
    out["window"] = doc.window ? json(*doc.window) : json(nullptr);
    return out.dump(2) + "\n";
}

MotifDocument parse_motifs(std::string_view text) {
    const json doc = parse_json(text, kMotifFormat);
    return guarded([&] {
        MotifDocument out;
        out.source = doc.value("source", std::string{});
        if (doc.contains("window") && !doc["window"].is_null()) out.window = doc["window"].get<std::size_t>();
        for (const auto& j : doc.at("motifs")) {
            MotifRecord r{sequence_from(j), j.at("rank").get<std::size_t>(), {}, {}, {}, {}, {}};
            if (j.contains("label")) r.label = j["label"].get<std::string>();
            if (j.contains("center_offset")) r.center_offset = j["center_offset"].get<std::size_t>();
            if (j.contains("pair_distance")) r.pair_distance = j["pair_distance"].get<double>();
            if (j.contains("radius")) r.radius = j["radius"].get<double>();
            if (j.contains("members")) r.members = j["members"].get<std::vector<std::size_t>>();
            out.motifs.push_back(std::move(r));
        }
        return out;
    });
}

MotifDocument load_motifs(const std::filesystem::path& path) { return parse_motifs(read_text(path)); }

std::string dump_model(const SomNetwork& net, const TrainingTrace* trace) {
    const auto& c = net.config();
    json config{{"epochs", c.epochs}, {"learning_rate", c.learning_rate}, {"radius", c.radius}, {"seed", c.seed}};
    config["window"] = c.window ? json(*c.window) : json(nullptr);
    json units = json::array();
    for (const auto& u : net.units()) units.push_back(sequence_json(u));
    json out{{"format", kModelFormat}, {"rows", net.rows()},       {"cols", net.cols()},
             {"epoch", net.epoch()},   {"config", std::move(config)}, {"units", std::move(units)}};
    if (trace) {
        out["trace"] = json{{"initial_qe", trace->initial_qe},
                            {"epoch_qe", trace->epoch_qe},
                            {"learning_rate", trace->learning_rate},
                            {"radius", trace->radius},
                            {"final_qe", trace->final_qe}};
    }
    return out.dump(2) + "\n";
}

SomNetwork parse_model(std::string_view text) {
    const json doc = parse_json(text, kModelFormat);
    return guarded([&] {
        const auto& jc = doc.at("config");
        TrainingConfig config;
        config.epochs = jc.at("epochs").get<std::size_t>();
        config.learning_rate = jc.at("learning_rate").get<double>();
        config.radius = jc.at("radius").get<double>();
        config.seed = jc.at("seed").get<std::uint64_t>();
        if (jc.contains("window") && !jc["window"].is_null()) config.window = jc["window"].get<std::size_t>();
        std::vector<Sequence> units;
        for (const auto& j : doc.at("units")) units.push_back(sequence_from(j));
        SomNetwork net(doc.at("rows").get<std::size_t>(), doc.at("cols").get<std::size_t>(), std::move(units),
                       config);
        net.set_epoch(doc.at("epoch").get<std::size_t>());
        return net;
    });
}

SomNetwork load_model(const std::filesystem::path& path) { return parse_model(read_text(path)); }

} // namespace dtwsom
