#include "ramansim/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramansim {

namespace {

void append_number(std::string& line, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    line += buf;
}

double parse_double(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad number in CSV: '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

void write_csv(std::ostream& os, const TimeSeries& series, const Metadata& metadata) {
    for (const auto& [key, value] : metadata) os << "# " << key << "=" << value << "\n";
    os << "tau";
    for (const auto& [label, values] : series.columns) {
        if (values.size() != series.tau.size())
            throw std::invalid_argument("column '" + label + "' does not match the time grid");
        os << "," << label;
    }
    os << "\n";
    std::string line;
    for (std::size_t i = 0; i < series.tau.size(); ++i) {
        line.clear();
        append_number(line, series.tau[i]);
        for (const auto& [label, values] : series.columns) {
            line += ',';
            append_number(line, values[i]);
        }
        line += '\n';
        os << line;
    }
}

void write_csv(const std::filesystem::path& path, const TimeSeries& series,
               const Metadata& metadata) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        write_csv(os, series, metadata);
        os.flush();
        if (!os) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

CsvFile read_csv(std::istream& is) {
    CsvFile out;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string_view body(line);
            body.remove_prefix(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            const std::size_t eq = body.find('=');
            if (eq != std::string_view::npos)
                out.metadata.emplace_back(std::string(body.substr(0, eq)),
                                          std::string(body.substr(eq + 1)));
            continue;
        }
        const std::vector<std::string_view> cells = split(line, ',');
        if (!have_header) {
            if (cells.empty() || cells[0] != "tau")
                throw std::invalid_argument("CSV header must start with 'tau'");
            for (std::size_t c = 1; c < cells.size(); ++c)
                out.series.columns.emplace_back(std::string(cells[c]), std::vector<double>{});
            have_header = true;
            continue;
        }
        if (cells.size() != out.series.columns.size() + 1)
            throw std::invalid_argument("CSV row has the wrong number of cells");
        out.series.tau.push_back(parse_double(cells[0]));
        for (std::size_t c = 1; c < cells.size(); ++c)
            out.series.columns[c - 1].second.push_back(parse_double(cells[c]));
    }
    if (!have_header) throw std::invalid_argument("CSV is missing its header row");
    return out;
}

CsvFile read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    return read_csv(is);
}

}  // namespace ramansim
