#pragma once

#include <string>
#include <vector>

namespace specmarket {

/// Numeric table with a fixed header: comma separators, '.' decimal point,
/// line-feed terminated rows, 12 significant digits, +inf printed as "inf".
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(const std::vector<double>& row);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    std::string to_string() const;
    void write_file(const std::string& path) const;

    static std::string format_value(double v);
    static CsvTable parse(const std::string& text);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace specmarket
