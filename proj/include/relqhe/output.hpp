#pragma once

#include <string>
#include <variant>
#include <vector>

namespace relqhe {

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    std::size_t column(const std::string& name) const;
    double number(std::size_t row, const std::string& col) const;
    std::string text(std::size_t row, const std::string& col) const;
};

std::string format_double(double v);  // 17 significant digits
std::string to_csv(const Table& t);
void write_file(const std::string& path, const std::string& content);

struct PlotSpec {
    std::string title;
    std::string x_column;
    std::string y_column;
    std::string group_column;  // one line per distinct value; may be empty
    std::vector<std::string> extra_y_columns;
};

std::string to_svg(const Table& t, const PlotSpec& spec);

}  // namespace relqhe
