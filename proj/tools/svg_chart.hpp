#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace wlb::svg {

struct Series {
    std::string name;
    std::string color;
    std::vector<double> values;  // aligned with the x labels
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

/// Minimal line chart, one x position per label. Deterministic output:
/// coordinates are formatted with fixed precision.
inline std::string line_chart(const std::string& title, const std::vector<std::string>& x_labels,
                              const std::vector<Series>& series) {
    using detail::num;

    const double width = 640, height = 400;
    const double left = 70, right = 620, top = 50, bottom = 350;

    double max_value = 0.0;
    for (const Series& s : series)
        for (double v : s.values) max_value = std::max(max_value, v);
    if (max_value <= 0.0) max_value = 1.0;
    max_value *= 1.1;

    const std::size_t n = x_labels.size();
    const auto x_at = [&](std::size_t i) {
        if (n <= 1) return (left + right) / 2.0;
        return left + (right - left) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    const auto y_at = [&](double v) { return bottom - (bottom - top) * (v / max_value); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<rect width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // horizontal grid with value labels
    for (int g = 0; g <= 5; ++g) {
        const double v = max_value * g / 5.0;
        const double y = y_at(v);
        out += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" + num(right) +
               "\" y2=\"" + num(y) + "\" stroke=\"#ddd\"/>\n";
        out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(v) + "</text>\n";
    }

    // axes
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(right) +
           "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";

    for (std::size_t i = 0; i < n; ++i)
        out += "<text x=\"" + num(x_at(i)) + "\" y=\"" + num(bottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               x_labels[i] + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const Series& sr = series[s];
        std::string points;
        for (std::size_t i = 0; i < sr.values.size() && i < n; ++i) {
            if (!points.empty()) points += " ";
            points += num(x_at(i)) + "," + num(y_at(sr.values[i]));
        }
        out += "<polyline fill=\"none\" stroke=\"" + sr.color + "\" stroke-width=\"2\" points=\"" +
               points + "\"/>\n";
        for (std::size_t i = 0; i < sr.values.size() && i < n; ++i)
            out += "<circle cx=\"" + num(x_at(i)) + "\" cy=\"" + num(y_at(sr.values[i])) +
                   "\" r=\"3\" fill=\"" + sr.color + "\"/>\n";

        // legend entry
        const double ly = top + 16.0 * static_cast<double>(s);
        out += "<line x1=\"" + num(right - 140) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(right - 116) + "\" y2=\"" + num(ly) + "\" stroke=\"" + sr.color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(right - 110) + "\" y=\"" + num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + sr.name + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace wlb::svg
