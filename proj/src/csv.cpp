#include "eitcool/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "eitcool/error.hpp"

namespace eitcool {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (value == 0.0)
        return "0";  // folds -0 as well
    char buf[32];
    // %g honours LC_NUMERIC; the CLI never changes the "C" locale.
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns))
{
}

void CsvTable::add_comment(std::string line)
{
    comments_.push_back(std::move(line));
}

void CsvTable::add_comments(const std::vector<std::string>& lines)
{
    comments_.insert(comments_.end(), lines.begin(), lines.end());
}

void CsvTable::add_row(const std::vector<double>& values)
{
    if (values.size() != columns_.size())
        throw std::logic_error("CSV row width does not match header");
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            row += ',';
        row += format_number(values[i]);
    }
    rows_.push_back(std::move(row));
}

void CsvTable::add_row(const std::vector<double>& values, const std::string& trailing)
{
    if (values.size() + 1 != columns_.size())
        throw std::logic_error("CSV row width does not match header");
    std::string row;
    for (double v : values) {
        row += format_number(v);
        row += ',';
    }
    row += trailing;
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& out) const
{
    for (const auto& c : comments_)
        out << "# " << c << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& r : rows_)
        out << r << '\n';
}

void CsvTable::write_file(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidParameter, "cannot write '" + path + "'");
    write(out);
}

}  // namespace eitcool
