#pragma once

#include <string>
#include <utility>
#include <vector>

namespace balpha::io {

// Shortest decimal that round-trips a double (17 significant digits).
std::string fmt_g17(double v);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

// Flat `key = value` manifest, UTF-8, LF line endings, insertion order kept.
using Manifest = std::vector<std::pair<std::string, std::string>>;
std::string to_manifest(const Manifest& kv);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace balpha::io
