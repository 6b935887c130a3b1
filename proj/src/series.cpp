#include "decolab/series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace decolab::series {

void DecoherenceSeries::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("series row width does not match columns");
    if (!rows.empty() && row.front() <= rows.back().front())
        throw std::invalid_argument("series time column must be strictly increasing");
    rows.push_back(std::move(row));
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const DecoherenceSeries& s, std::ostream& out) {
    if (s.rows.empty()) throw std::invalid_argument("refusing to write an empty series");
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
        if (c) out << ',';
        out << s.columns[c];
    }
    out << '\n';
    for (const auto& row : s.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_value(row[c]);
        }
        out << '\n';
    }
}

void write_csv(const DecoherenceSeries& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    write_csv(s, f);
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::vector<double> time_grid(double t_min, double t_max, int points, bool log_spaced) {
    if (points < 2 || t_max <= t_min)
        throw std::invalid_argument("time grid needs >= 2 points and t_max > t_min");
    if (log_spaced && t_min <= 0.0)
        throw std::invalid_argument("log time grid needs t_min > 0");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        g[i] = log_spaced ? t_min * std::pow(t_max / t_min, f)
                          : t_min + f * (t_max - t_min);
    }
    return g;
}

} // namespace decolab::series
