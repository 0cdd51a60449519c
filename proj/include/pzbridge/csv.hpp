#pragma once

#include <string>
#include <vector>

namespace pzbridge {

/// A rectangular table of doubles with named columns, used for sweep output.
/// A table may carry one leading text column (e.g. the configuration name);
/// `label_header` is empty when it does not.
struct SweepTable {
    std::string label_header;
    std::vector<std::string> row_labels;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Formats one value the way the CSV writer does (12 significant digits).
std::string format_csv_value(double value);

/// Comma-separated output: header row, '.' decimal separator, scientific
/// notation permitted, '\n' line endings.  Byte-deterministic for equal input.
std::string to_csv(const SweepTable& table);

/// Parses text produced by to_csv back into a table.
SweepTable parse_csv(const std::string& text);

/// Writes content to path, or to stdout when path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace pzbridge
