#pragma once

// CSV output: an optional '#' metadata line with volatile details (time of
// generation), then a header row and a deterministic body.

#include <cstdint>
#include <filesystem>
#include <string>
#include <type_traits>
#include <vector>

#include "reinfog/core/io.hpp"

namespace reinfog::experiments {

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws std::invalid_argument when the width differs from the header.
    void add_row(std::vector<std::string> cells);

    std::size_t rows() const noexcept { return rows_.size(); }

    /// Header plus rows, no metadata.
    std::string body() const;

    /// Writes "# <metadata>" followed by body(); creates parent directories.
    void write(const std::filesystem::path& path, const std::string& metadata) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline std::string cell(double v) { return format_number(v); }
inline std::string cell(bool v) { return v ? "1" : "0"; }
inline std::string cell(const std::string& v) { return v; }
inline std::string cell(const char* v) { return v; }
template <typename T>
    requires std::is_integral_v<T> && (!std::is_same_v<T, bool>)
std::string cell(T v) {
    return std::to_string(v);
}

/// "reinfog <command> seed=<seed> generated=<UTC time>".
std::string metadata_line(const std::string& command, std::uint64_t seed);

/// Removes leading '#' lines, leaving what determinism checks compare.
std::string strip_metadata(const std::string& text);

}  // namespace reinfog::experiments
