#include "pzbridge/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace pzbridge {

std::string format_csv_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string to_csv(const SweepTable& table) {
    const bool labelled = !table.label_header.empty();
    if (labelled && table.row_labels.size() != table.rows.size()) {
        throw std::runtime_error("csv table has mismatched row labels");
    }
    std::string out;
    if (labelled) {
        out += table.label_header;
        if (!table.columns.empty()) out += ',';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (labelled) {
            out += table.row_labels[r];
            if (!table.rows[r].empty()) out += ',';
        }
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out += ',';
            out += format_csv_value(table.rows[r][c]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

bool is_number(const std::string& text) {
    try {
        std::size_t used = 0;
        (void)std::stod(text, &used);
        return used == text.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

SweepTable parse_csv(const std::string& text) {
    SweepTable table;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> body;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header.empty()) {
            header = split_cells(line);
        } else {
            body.push_back(split_cells(line));
        }
    }
    if (header.empty()) {
        throw std::runtime_error("csv input has no header row");
    }
    const bool labelled = !body.empty() && !is_number(body.front().front());
    std::size_t first_numeric = 0;
    if (labelled) {
        table.label_header = header.front();
        first_numeric = 1;
    }
    table.columns.assign(header.begin() + static_cast<std::ptrdiff_t>(first_numeric),
                         header.end());
    for (const auto& cells : body) {
        if (cells.size() != header.size()) {
            throw std::runtime_error("csv row width does not match header");
        }
        if (labelled) table.row_labels.push_back(cells.front());
        std::vector<double> row;
        for (std::size_t c = first_numeric; c < cells.size(); ++c) {
            row.push_back(std::stod(cells[c]));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out << content;
}

}  // namespace pzbridge
