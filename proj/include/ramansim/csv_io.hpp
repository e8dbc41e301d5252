#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ramansim/scenario.hpp"

namespace ramansim {

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct CsvFile {
    Metadata metadata;
    TimeSeries series;
};

// Layout: '#'-prefixed key=value metadata lines, a header row
// "tau,<observable>...", then comma-separated rows printed with 17 significant
// digits (doubles survive a write/read round trip bit-exactly). LF line ends.
void write_csv(std::ostream& os, const TimeSeries& series, const Metadata& metadata);

// Writes to a temporary sibling and renames it into place.
void write_csv(const std::filesystem::path& path, const TimeSeries& series,
               const Metadata& metadata);

CsvFile read_csv(std::istream& is);
CsvFile read_csv(const std::filesystem::path& path);

}  // namespace ramansim
