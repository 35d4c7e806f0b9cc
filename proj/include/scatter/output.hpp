#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace scatter {

/// 17 significant digits, lowercase scientific, locale-independent
/// (std::to_chars). "inf"/"nan" for non-finite values.
std::string fmt_float(double v);

/// CSV with a leading comment line carrying the config hash and artifact
/// version, then a mandatory header row. Byte-deterministic for fixed input.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header,
              const std::string& config_hash);
    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::ofstream out_;
};

}  // namespace scatter
