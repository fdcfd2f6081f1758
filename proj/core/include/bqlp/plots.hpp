#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bqlp/ledger.hpp"
#include "bqlp/timeseries.hpp"

namespace bqlp {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart. Non-finite points break the polyline.
std::string render_svg_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                             const std::vector<PlotSeries>& series);

/// Chart base names written by emit_plots, each as <name>.svg and <name>.dat:
///   criterion_vs_bkm       columns: t f bkm
///   dissipation_wavenumber columns: t Q
///   sobolev_norms          columns: t hs_u hsigma_theta
///   criterion_integral     columns: t int_f int_bkm
struct PlotLayout {
    std::string name;
    std::vector<std::string> columns;
};
const std::vector<PlotLayout>& plot_layouts();

/// Writes the four charts and their .dat tables into `directory` (created if
/// needed). Returns the paths written.
std::vector<std::filesystem::path> emit_plots(const std::vector<TimeseriesRow>& rows,
                                              const std::filesystem::path& directory);
std::vector<std::filesystem::path> emit_plots(const CriterionLedger& ledger, const std::filesystem::path& directory);

}  // namespace bqlp
