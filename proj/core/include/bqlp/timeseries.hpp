#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bqlp/ledger.hpp"

namespace bqlp {

/// One CSV row. Q holds the block index when resolved, -1 when unresolved
/// and -2 when undefined; lambda is NaN in the last two cases.
struct TimeseriesRow {
    double t = 0.0;
    double energy_u = 0.0;
    double energy_theta = 0.0;
    double hs_u = 0.0;
    double hsigma_theta = 0.0;
    int q = 0;
    double lambda = 0.0;
    double f = 0.0;
    double int_f = 0.0;
    double bkm = 0.0;
    double int_bkm = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
};

inline constexpr std::array<std::string_view, 14> kTimeseriesColumns = {
    "t", "energy_u", "energy_theta", "hs_u", "hsigma_theta", "Q", "lambda",
    "f", "int_f", "bkm", "int_bkm", "i1", "i2", "i3"};

inline constexpr int kQUnresolved = -1;
inline constexpr int kQUndefined = -2;

std::vector<TimeseriesRow> ledger_rows(const CriterionLedger& ledger);

/// CSV text with a header row and 17 significant digits per value.
std::string format_timeseries(const CriterionLedger& ledger);
std::string format_timeseries(const std::vector<TimeseriesRow>& rows);
void write_timeseries(const CriterionLedger& ledger, const std::filesystem::path& path);

/// Throws Error on a malformed header or row.
std::vector<TimeseriesRow> parse_timeseries(std::string_view csv);
std::vector<TimeseriesRow> read_timeseries(const std::filesystem::path& path);

/// 17-significant-digit rendering shared by every text output.
std::string format_number(double v);

}  // namespace bqlp
