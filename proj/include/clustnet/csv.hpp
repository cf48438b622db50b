#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace clustnet {

/// Fixed formatting so analytic outputs are byte-identical across runs.
std::string fmt_double(double v);

/// Comma-separated, '.' decimal, UTF-8; leading '#' comment lines carry the
/// resolved parameters and seed.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void comment(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream out_;
};

} // namespace clustnet
