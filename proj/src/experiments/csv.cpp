#include "reinfog/experiments/csv.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace reinfog::experiments {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw std::invalid_argument("csv header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv row has " + std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(header_.size()));
    rows_.push_back(std::move(cells));
}

std::string CsvTable::body() const {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out.str();
}

void CsvTable::write(const std::filesystem::path& path, const std::string& metadata) const {
    write_text_file(path, "# " + metadata + "\n" + body());
}

std::string metadata_line(const std::string& command, std::uint64_t seed) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return "reinfog " + command + " seed=" + std::to_string(seed) + " generated=" + stamp;
}

std::string strip_metadata(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == '#') {
        const auto nl = text.find('\n', pos);
        if (nl == std::string::npos) return {};
        pos = nl + 1;
    }
    return text.substr(pos);
}

}  // namespace reinfog::experiments
