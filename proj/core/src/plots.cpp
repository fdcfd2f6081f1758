#include "bqlp/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "bqlp/errors.hpp"

namespace bqlp {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 160.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void settle() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi == lo) {
            const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
            lo -= pad;
            hi += pad;
        }
    }
};

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string render_svg_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                             const std::vector<PlotSeries>& series) {
    Range xr, yr;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                xr.include(s.x[i]);
                yr.include(s.y[i]);
            }
        }
    }
    xr.settle();
    yr.settle();
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + escape_xml(title) + "</text>\n";
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
        svg += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" + num(px(fx)) + "\" y2=\"" +
               num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kTop + ph + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + tick(fx) + "</text>\n";
        svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
               num(py(fy)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(fy) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + tick(fy) + "</text>\n";
    }
    svg += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 15) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape_xml(x_label) +
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 " + num(kTop + ph / 2) + ")\">" + escape_xml(y_label) +
           "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        std::string points;
        auto flush = [&] {
            if (!points.empty()) {
                svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" +
                       points + "\"/>\n";
                points.clear();
            }
        };
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            if (!points.empty()) points += ' ';
            points += num(px(s.x[i])) + "," + num(py(s.y[i]));
        }
        flush();
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(k);
        svg += "<line x1=\"" + num(kLeft + pw + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(kLeft + pw + 36) +
               "\" y2=\"" + num(ly) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(kLeft + pw + 42) + "\" y=\"" + num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(s.label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

const std::vector<PlotLayout>& plot_layouts() {
    static const std::vector<PlotLayout> layouts = {
        {"criterion_vs_bkm", {"t", "f", "bkm"}},
        {"dissipation_wavenumber", {"t", "Q"}},
        {"sobolev_norms", {"t", "hs_u", "hsigma_theta"}},
        {"criterion_integral", {"t", "int_f", "int_bkm"}},
    };
    return layouts;
}

std::vector<std::filesystem::path> emit_plots(const std::vector<TimeseriesRow>& rows,
                                              const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());

    auto column = [&](double TimeseriesRow::*member) {
        std::vector<double> v;
        v.reserve(rows.size());
        for (const auto& r : rows) v.push_back(r.*member);
        return v;
    };
    const std::vector<double> t = column(&TimeseriesRow::t);
    std::vector<double> q;
    for (const auto& r : rows) q.push_back(r.q >= 0 ? static_cast<double>(r.q) : std::nan(""));

    struct Chart {
        std::string title, y_label;
        std::vector<PlotSeries> series;
    };
    const std::vector<Chart> charts = {
        {"Criterion integrand vs vorticity sup norm", "value",
         {{"f(t)", t, column(&TimeseriesRow::f)}, {"||curl u||_inf", t, column(&TimeseriesRow::bkm)}}},
        {"Dissipation wave number Q(t)", "Q", {{"Q(t)", t, q}}},
        {"Sobolev norms", "norm",
         {{"||u||_H^s", t, column(&TimeseriesRow::hs_u)},
          {"||theta||_H^sigma", t, column(&TimeseriesRow::hsigma_theta)}}},
        {"Running criterion integrals", "integral",
         {{"int f dt", t, column(&TimeseriesRow::int_f)}, {"int ||curl u||_inf dt", t, column(&TimeseriesRow::int_bkm)}}},
    };

    std::vector<std::filesystem::path> written;
    const auto& layouts = plot_layouts();
    for (std::size_t i = 0; i < charts.size(); ++i) {
        const Chart& chart = charts[i];
        const auto svg_path = directory / (layouts[i].name + ".svg");
        write_text(svg_path, render_svg_chart(chart.title, "t", chart.y_label, chart.series));
        written.push_back(svg_path);

        std::string dat = "#";
        for (const auto& col : layouts[i].columns) dat += " " + col;
        dat += '\n';
        for (std::size_t r = 0; r < t.size(); ++r) {
            dat += format_number(t[r]);
            for (const auto& s : chart.series) dat += " " + format_number(s.y[r]);
            dat += '\n';
        }
        const auto dat_path = directory / (layouts[i].name + ".dat");
        write_text(dat_path, dat);
        written.push_back(dat_path);
    }
    return written;
}

std::vector<std::filesystem::path> emit_plots(const CriterionLedger& ledger, const std::filesystem::path& directory) {
    return emit_plots(ledger_rows(ledger), directory);
}

}  // namespace bqlp
