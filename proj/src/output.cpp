#include "relqhe/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "relqhe/errors.hpp"

namespace relqhe {

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw Error(ErrorKind::BadParameter, "no column '" + name + "'");
}

double Table::number(std::size_t row, const std::string& col) const {
    const Cell& c = rows.at(row).at(column(col));
    if (const double* d = std::get_if<double>(&c)) return *d;
    if (const long* l = std::get_if<long>(&c)) return static_cast<double>(*l);
    throw Error(ErrorKind::BadParameter, "column '" + col + "' is not numeric");
}

std::string Table::text(std::size_t row, const std::string& col) const {
    const Cell& c = rows.at(row).at(column(col));
    if (const std::string* s = std::get_if<std::string>(&c)) return *s;
    if (const long* l = std::get_if<long>(&c)) return std::to_string(*l);
    return format_double(std::get<double>(c));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ',';
        out += t.header[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) out += format_double(v);
                    else if constexpr (std::is_same_v<V, long>) out += std::to_string(v);
                    else out += v;
                },
                row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::BadParameter, "cannot write '" + path + "'");
    f << content;
    if (!f) throw Error(ErrorKind::BadParameter, "write failed for '" + path + "'");
}

namespace {

const char* palette[] = {"#1f5fa8", "#c0392b", "#2e8b57", "#8e44ad", "#d68910", "#17a589"};

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else o += c;
    }
    return o;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

std::string to_svg(const Table& t, const PlotSpec& spec) {
    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<std::string> ycols{spec.y_column};
    ycols.insert(ycols.end(), spec.extra_y_columns.begin(), spec.extra_y_columns.end());
    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const std::string g = spec.group_column.empty() ? "" : t.text(r, spec.group_column);
        for (const auto& yc : ycols) {
            const std::string label = (g.empty() ? "" : spec.group_column + "=" + g + " ") + yc;
            auto it = index.find(label);
            if (it == index.end()) {
                it = index.emplace(label, series.size()).first;
                series.push_back({label, {}});
            }
            const double x = t.number(r, spec.x_column), y = t.number(r, yc);
            if (std::isfinite(x) && std::isfinite(y)) series[it->second].pts.emplace_back(x, y);
        }
    }
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (auto [x, y] : s.pts) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) {
        const double pad = y0 == 0.0 ? 1.0 : std::abs(y0) * 1e-6;
        y0 -= pad;
        y1 += pad;
    }
    const double W = 720, H = 480, ml = 90, mr = 20, mt = 40, mb = 60;
    auto sx = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
    auto sy = [&](double y) { return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
      << esc(spec.title) << "</text>\n";
    o << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr << "\" height=\"" << H - mt - mb
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
        o << "<text x=\"" << num(sx(xv)) << "\" y=\"" << H - mb + 18
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick(xv) << "</text>\n";
        o << "<text x=\"" << ml - 6 << "\" y=\"" << num(sy(yv) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick(yv) << "</text>\n";
    }
    o << "<text x=\"" << W / 2 << "\" y=\"" << H - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << esc(spec.x_column) << "</text>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* col = palette[i % (sizeof palette / sizeof palette[0])];
        o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.6\" points=\"";
        for (auto [x, y] : s.pts) o << num(sx(x)) << ',' << num(sy(y)) << ' ';
        o << "\"/>\n";
        o << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 16 + 15 * i << "\" fill=\"" << col
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << esc(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace relqhe
