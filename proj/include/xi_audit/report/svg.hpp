#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace xi_audit {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    /// Plot sign(y)·log10(1 + |y|) instead of y; for exponentially growing curves.
    bool signed_log = false;
    int width = 640;
    int height = 400;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/// A self-contained SVG line chart; empty or non-finite data still yields a valid document.
inline std::string render_svg(const SvgPlot& p) {
    const double left = 70, right = 20, top = 40, bottom = 50;
    const double w = p.width - left - right;
    const double h = p.height - top - bottom;
    auto tr = [&](double y) { return p.signed_log ? std::copysign(std::log10(1 + std::abs(y)), y) : y; };

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : p.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            const double y = tr(s.y[i]);
            if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
            if (!any) {
                xmin = xmax = s.x[i];
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * w; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * h; };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(p.width) + "\" height=\"" +
         std::to_string(p.height) + "\" viewBox=\"0 0 " + std::to_string(p.width) + " " + std::to_string(p.height) +
         "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + detail::coord(p.width / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         detail::xml_escape(p.title) + "</text>\n";
    s += "<rect x=\"" + detail::coord(left) + "\" y=\"" + detail::coord(top) + "\" width=\"" + detail::coord(w) +
         "\" height=\"" + detail::coord(h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    if (ymin < 0 && ymax > 0) {
        s += "<line x1=\"" + detail::coord(left) + "\" y1=\"" + detail::coord(py(0)) + "\" x2=\"" +
             detail::coord(left + w) + "\" y2=\"" + detail::coord(py(0)) + "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    s += "<text x=\"" + detail::coord(left + w / 2) + "\" y=\"" + detail::coord(p.height - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + detail::xml_escape(p.x_label) + "</text>\n";
    const std::string ylab = p.signed_log ? "sgn*log10(1+|" + p.y_label + "|)" : p.y_label;
    s += "<text x=\"16\" y=\"" + detail::coord(top + h / 2) + "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 " +
         detail::coord(top + h / 2) + ")\">" + detail::xml_escape(ylab) + "</text>\n";
    s += "<text x=\"" + detail::coord(left - 4) + "\" y=\"" + detail::coord(top + 4) +
         "\" text-anchor=\"end\" font-size=\"10\">" + format_significant(ymax, 4) + "</text>\n";
    s += "<text x=\"" + detail::coord(left - 4) + "\" y=\"" + detail::coord(top + h) +
         "\" text-anchor=\"end\" font-size=\"10\">" + format_significant(ymin, 4) + "</text>\n";
    s += "<text x=\"" + detail::coord(left) + "\" y=\"" + detail::coord(top + h + 14) + "\" font-size=\"10\">" +
         format_significant(xmin, 4) + "</text>\n";
    s += "<text x=\"" + detail::coord(left + w) + "\" y=\"" + detail::coord(top + h + 14) +
         "\" text-anchor=\"end\" font-size=\"10\">" + format_significant(xmax, 4) + "</text>\n";

    for (std::size_t k = 0; k < p.series.size(); ++k) {
        const auto& ser = p.series[k];
        std::string pts;
        for (std::size_t i = 0; i < std::min(ser.x.size(), ser.y.size()); ++i) {
            const double y = tr(ser.y[i]);
            if (!std::isfinite(ser.x[i]) || !std::isfinite(y)) continue;
            if (!pts.empty()) pts += ' ';
            pts += detail::coord(px(ser.x[i])) + "," + detail::coord(py(y));
        }
        const char* color = colors[k % 5];
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        s += "<text x=\"" + detail::coord(left + 8) + "\" y=\"" + detail::coord(top + 14 + 14.0 * k) +
             "\" font-size=\"11\" fill=\"" + color + "\">" + detail::xml_escape(ser.label) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace xi_audit
