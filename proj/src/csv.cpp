#include "specmarket/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace specmarket {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw std::invalid_argument("CsvTable: empty header");
}

void CsvTable::add_row(const std::vector<double>& row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("CsvTable: row width does not match header");
    rows_.push_back(row);
}

std::string CsvTable::format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

void CsvTable::write_file(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << to_string();
    if (!f) throw std::runtime_error("write failed: " + path);
}

CsvTable CsvTable::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("CsvTable::parse: empty input");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    CsvTable table(header);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream rs(line);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            if (cell == "inf") {
                row.push_back(std::numeric_limits<double>::infinity());
            } else if (cell == "-inf") {
                row.push_back(-std::numeric_limits<double>::infinity());
            } else {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                if (pos != cell.size())
                    throw std::invalid_argument("CsvTable::parse: bad cell '" + cell + "'");
                row.push_back(v);
            }
        }
        table.add_row(row);
    }
    return table;
}

}  // namespace specmarket
