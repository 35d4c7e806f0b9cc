#include "scatter/output.hpp"

#include <charconv>
#include <cmath>

#include "scatter/errors.hpp"
#include "scatter/version.hpp"

namespace scatter {

std::string fmt_float(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::string& config_hash) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    out_.open(path, std::ios::binary);  // avoid platform newline translation
    if (!out_) throw Error("cannot open output file: " + path.string());
    out_ << "# config_hash=" << config_hash << " version=" << kArtifactName << "-"
         << kArtifactVersion << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        out_ << header[i] << (i + 1 < header.size() ? "," : "");
    }
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "");
    }
    out_ << "\n";
}

void CsvWriter::close() { out_.close(); }

}  // namespace scatter
