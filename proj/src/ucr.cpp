#include "dtwsom/ucr.hpp"

#include "dtwsom/format.hpp"
#include "dtwsom/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace dtwsom::ucr {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '\t' || line[i] == ',') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    // Trailing delimiters leave empty fields behind.
    while (!fields.empty() && fields.back().find_first_not_of(" \r") == std::string_view::npos) fields.pop_back();
    return fields;
}

std::string normalize_label(std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\r')) token.remove_suffix(1);
    if (const auto v = parse_double(token); v && std::isfinite(*v) && *v == std::floor(*v) &&
                                            std::fabs(*v) < 1e15)
        return std::to_string(static_cast<long long>(*v));
    return std::string(token);
}

} // namespace

LabeledDataset parse(std::string_view text, std::string source) {
    LabeledDataset ds;
    ds.source = std::move(source);
    std::size_t row = 0;
    std::size_t width = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto fields = split_fields(line);
        if (fields.size() < 2) throw DataError("row " + std::to_string(row) + ": expected a label and values");
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t f = 1; f < fields.size(); ++f) {
            const auto v = parse_double(fields[f]);
            if (!v || !std::isfinite(*v))
                throw DataError("row " + std::to_string(row) + ": non-numeric value '" + std::string(fields[f]) +
                                "' in column " + std::to_string(f + 1));
            values.push_back(*v);
        }
        if (width == 0) width = values.size();
        if (values.size() != width)
            throw DataError("row " + std::to_string(row) + ": ragged row with " + std::to_string(values.size()) +
                            " values, expected " + std::to_string(width));
        ds.labels.push_back(normalize_label(fields[0]));
        ds.sequences.push_back(Sequence::univariate(std::move(values), ds.source + "#" + std::to_string(row)));
    }
    if (ds.sequences.empty()) throw DataError("no series found in '" + ds.source + "'");
    return ds;
}

LabeledDataset load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.filename().string());
}

std::string serialize(const LabeledDataset& dataset) {
    std::string out;
    for (std::size_t r = 0; r < dataset.sequences.size(); ++r) {
        out += dataset.labels[r];
        for (double v : dataset.sequences[r].values()) {
            out += '\t';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

LongSeries prepare(const LabeledDataset& dataset, const std::set<std::string>& exclude,
                   std::optional<std::size_t> sample, std::uint64_t seed) {
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < dataset.sequences.size(); ++r)
        if (!exclude.contains(dataset.labels[r])) kept.push_back(r);
    if (kept.empty()) throw DataError("no series left after excluding labels");
    if (sample) {
        if (*sample == 0) throw DataError("sample size must be positive");
        if (*sample > kept.size())
            throw DataError("cannot sample " + std::to_string(*sample) + " series from " +
                            std::to_string(kept.size()));
        Rng rng(seed);
        rng.shuffle(std::span<std::size_t>(kept));
        kept.resize(*sample);
        std::sort(kept.begin(), kept.end());
    }
    std::vector<Sequence> chosen;
    chosen.reserve(kept.size());
    for (std::size_t r : kept) chosen.push_back(dataset.sequences[r]);
    return concatenate(chosen);
}

} // namespace dtwsom::ucr
