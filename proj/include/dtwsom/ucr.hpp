#ifndef DTWSOM_UCR_HPP
#define DTWSOM_UCR_HPP

#include "dtwsom/sequence.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dtwsom::ucr {

struct LabeledDataset {
    std::vector<Sequence> sequences;
    std::vector<std::string> labels;
    std::string source;
};

/// Reads a UCR archive text file: one series per row, class label first,
/// fields separated by tabs or commas. Integral numeric labels are
/// normalized ("1.0000000e+00" -> "1"). Throws DataError naming the row on
/// ragged rows, unparsable numbers or an empty file.
LabeledDataset load(const std::filesystem::path& path);
LabeledDataset parse(std::string_view text, std::string source = {});

/// Tab-separated UCR text with shortest round-trip number formatting.
std::string serialize(const LabeledDataset& dataset);

/// Drops excluded labels, optionally samples n rows without replacement
/// (kept in file order), then concatenates. Throws DataError when nothing
/// remains or n exceeds what does.
LongSeries prepare(const LabeledDataset& dataset, const std::set<std::string>& exclude,
                   std::optional<std::size_t> sample, std::uint64_t seed);

} // namespace dtwsom::ucr

#endif
