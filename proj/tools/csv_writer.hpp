#ifndef MLBEAM_TOOLS_CSV_WRITER_HPP
#define MLBEAM_TOOLS_CSV_WRITER_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlbeam::cli {

// Full double precision so regression fixtures are exact.
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file '" + path + "'");
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }
    void header(const std::vector<std::string>& cols) { line(cols); }
    void row(const std::vector<std::string>& cells) { line(cells); }

private:
    void line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

}  // namespace mlbeam::cli

#endif  // MLBEAM_TOOLS_CSV_WRITER_HPP
