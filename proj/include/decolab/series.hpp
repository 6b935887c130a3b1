// series.hpp — Ordered sample series and CSV emission

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decolab::series {

struct DecoherenceSeries {
    std::vector<std::string> columns; // first column is time
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
};

// Comma-separated, '.' decimal, header row, LF endings, 17 significant digits.
void write_csv(const DecoherenceSeries& s, std::ostream& out);
void write_csv(const DecoherenceSeries& s, const std::string& path);

std::string format_value(double v);

// Linear or logarithmic time grid with `points` entries.
std::vector<double> time_grid(double t_min, double t_max, int points, bool log_spaced);

} // namespace decolab::series
