#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eitcool {

// Shortest round-trippable-looking representation with 12 significant digits.
std::string format_number(double value);

// Comma-separated table with `#` header lines. Output is byte-deterministic:
// LF line endings, `.` as the decimal separator regardless of locale.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_comment(std::string line);
    void add_comments(const std::vector<std::string>& lines);

    // Cells are formatted eagerly; the row width must match the column count.
    void add_row(const std::vector<double>& values);
    void add_row(const std::vector<double>& values, const std::string& trailing);

    std::size_t rows() const { return rows_.size(); }

    void write(std::ostream& out) const;
    void write_file(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::string> rows_;
};

}  // namespace eitcool
