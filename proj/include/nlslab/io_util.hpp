// CSV/JSON/file helpers and the content hash used by run manifests.
#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace nlslab {

using json = nlohmann::json;

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void close();
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
    std::size_t ncols_;
};

std::uint64_t fnv1a64(const void* data, std::size_t n);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t h);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

} // namespace nlslab
