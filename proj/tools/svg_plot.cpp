// svg_plot.cpp - fixed-layout log-log plot emission with deterministic formatting
#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace dtrain::cli {

namespace {

constexpr double box_left = 80.0;
constexpr double box_right = 760.0;
constexpr double box_top = 60.0;
constexpr double box_bottom = 520.0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

void write_loglog_svg(const ConvergenceReport& report, const std::string& annotation,
                      const std::string& path) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        if (i < report.rel_errors.size() && report.rel_errors[i] > 0.0) {
            xs.push_back(std::log10(double(report.n_values[i])));
            ys.push_back(std::log10(report.rel_errors[i]));
        }
    }
    double x_lo = 0.0, x_hi = 1.0, y_lo = -1.0, y_hi = 0.0;
    if (!xs.empty()) {
        x_lo = *std::min_element(xs.begin(), xs.end());
        x_hi = *std::max_element(xs.begin(), xs.end());
        y_lo = *std::min_element(ys.begin(), ys.end());
        y_hi = *std::max_element(ys.begin(), ys.end());
    }
    if (x_hi - x_lo < 1e-9) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    if (y_hi - y_lo < 1e-9) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double x_pad = 0.04 * (x_hi - x_lo);
    const double y_pad = 0.06 * (y_hi - y_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    y_lo -= y_pad;
    y_hi += y_pad;

    const auto px = [&](double lx) {
        return box_left + (lx - x_lo) / (x_hi - x_lo) * (box_right - box_left);
    };
    const auto py = [&](double ly) {
        return box_bottom - (ly - y_lo) / (y_hi - y_lo) * (box_bottom - box_top);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("write_loglog_svg: cannot open " + path);
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"32\" font-family=\"sans-serif\" font-size=\"18\" "
           "text-anchor=\"middle\">"
        << escape_xml(report.observable_id) << " relative error vs N</text>\n";

    // decade grid lines with labels
    for (int k = int(std::ceil(x_lo)); k <= int(std::floor(x_hi)); ++k) {
        const double x = px(double(k));
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(box_top) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(box_bottom) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(box_bottom + 20.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << fmt_sci(std::pow(10.0, k)) << "</text>\n";
    }
    for (int k = int(std::ceil(y_lo)); k <= int(std::floor(y_hi)); ++k) {
        const double y = py(double(k));
        out << "<line x1=\"" << fmt(box_left) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(box_right) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(box_left - 8.0) << "\" y=\"" << fmt(y + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << fmt_sci(std::pow(10.0, k)) << "</text>\n";
    }
    out << "<rect x=\"" << fmt(box_left) << "\" y=\"" << fmt(box_top) << "\" width=\""
        << fmt(box_right - box_left) << "\" height=\"" << fmt(box_bottom - box_top)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // dashed guide at the fitted slope through the window's least-squares line
    if (report.fit_valid && xs.size() >= 2) {
        double mean_x = 0.0, mean_y = 0.0;
        int used = 0;
        for (std::size_t i = 0; i < report.n_values.size(); ++i) {
            const int n = report.n_values[i];
            if (n < report.fit_lo || n > report.fit_hi || !(report.rel_errors[i] > 0.0)) {
                continue;
            }
            mean_x += std::log10(double(n));
            mean_y += std::log10(report.rel_errors[i]);
            ++used;
        }
        if (used >= 2) {
            mean_x /= used;
            mean_y /= used;
            const double gx0 = std::log10(double(report.fit_lo));
            const double gx1 = std::log10(double(report.fit_hi));
            const double gy0 = mean_y + report.fitted_slope * (gx0 - mean_x);
            const double gy1 = mean_y + report.fitted_slope * (gx1 - mean_x);
            out << "<line x1=\"" << fmt(px(gx0)) << "\" y1=\"" << fmt(py(gy0)) << "\" x2=\""
                << fmt(px(gx1)) << "\" y2=\"" << fmt(py(gy1))
                << "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
            char slope_text[64];
            std::snprintf(slope_text, sizeof(slope_text), "slope %.3f", report.fitted_slope);
            out << "<text x=\"" << fmt(box_right - 10.0) << "\" y=\"" << fmt(box_top + 20.0)
                << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"end\" "
                   "fill=\"#d62728\">"
                << slope_text << "</text>\n";
        }
    }

    if (!xs.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i > 0) {
                out << " ";
            }
            out << fmt(px(xs[i])) << "," << fmt(py(ys[i]));
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out << "<circle cx=\"" << fmt(px(xs[i])) << "\" cy=\"" << fmt(py(ys[i]))
                << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
        }
    } else {
        out << "<text x=\"400\" y=\"300\" font-family=\"sans-serif\" font-size=\"14\" "
               "text-anchor=\"middle\">no positive relative errors to plot</text>\n";
    }

    out << "<text x=\"400\" y=\"" << fmt(box_bottom + 44.0)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">N</text>\n";
    out << "<text x=\"24\" y=\"290\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 24 290)\">relative error</text>\n";
    out << "<text x=\"400\" y=\"580\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">"
        << escape_xml(annotation) << "</text>\n";
    out << "</svg>\n";
    out.flush();
    if (!out) {
        throw IoError("write_loglog_svg: write failed for " + path);
    }
}

} // namespace dtrain::cli
