#ifndef DTWSOM_IO_HPP
#define DTWSOM_IO_HPP

#include "dtwsom/motif.hpp"
#include "dtwsom/som.hpp"
#include "dtwsom/synthgen.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dtwsom {

/// One motif center as stored on disk. Extraction fills the discovery
/// fields; the synthetic generator fills the label.
struct MotifRecord {
    Sequence center;
    std::size_t rank = 0;
    std::optional<std::string> label;
    std::optional<std::size_t> center_offset;
    std::optional<double> pair_distance;
    std::optional<double> radius;
    std::vector<std::size_t> members;
};

/// The motif-center document shared by `synth`, `extract`, `train` and `report`.
struct MotifDocument {
    std::string source;
    std::optional<std::size_t> window; // fixed motif length, empty for variable-length sets
    std::vector<MotifRecord> motifs;

    std::vector<Sequence> centers() const;
};

MotifDocument to_document(const MotifSet& set, std::string source);
MotifDocument to_document(const std::vector<synth::LabeledCenter>& centers);

std::string dump_motifs(const MotifDocument& doc);
MotifDocument parse_motifs(std::string_view text);
MotifDocument load_motifs(const std::filesystem::path& path);

std::string dump_model(const SomNetwork& net, const TrainingTrace* trace = nullptr);
SomNetwork parse_model(std::string_view text);
SomNetwork load_model(const std::filesystem::path& path);

} // namespace dtwsom

#endif
