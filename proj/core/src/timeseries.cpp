#include "bqlp/timeseries.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bqlp/errors.hpp"

namespace bqlp {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<TimeseriesRow> ledger_rows(const CriterionLedger& ledger) {
    std::vector<TimeseriesRow> rows;
    rows.reserve(ledger.samples.size());
    for (std::size_t i = 0; i < ledger.samples.size(); ++i) {
        const DiagnosticsRecord& r = ledger.samples[i];
        TimeseriesRow row;
        row.t = r.t;
        row.energy_u = r.energy_u;
        row.energy_theta = r.energy_theta;
        row.hs_u = r.hs_u;
        row.hsigma_theta = r.hsigma_theta;
        switch (r.cutoff_status) {
            case CutoffStatus::resolved:
                row.q = r.q_value;
                row.lambda = r.lambda_value;
                break;
            case CutoffStatus::unresolved:
                row.q = kQUnresolved;
                row.lambda = std::nan("");
                break;
            case CutoffStatus::undefined:
                row.q = kQUndefined;
                row.lambda = std::nan("");
                break;
        }
        row.f = r.f;
        row.int_f = ledger.integral_f_history[i];
        row.bkm = r.bkm;
        row.int_bkm = ledger.integral_bkm_history[i];
        row.i1 = r.flux.i1;
        row.i2 = r.flux.i2;
        row.i3 = r.flux.i3;
        rows.push_back(row);
    }
    return rows;
}

std::string format_timeseries(const std::vector<TimeseriesRow>& rows) {
    std::string out;
    for (std::size_t i = 0; i < kTimeseriesColumns.size(); ++i) {
        if (i) out += ',';
        out += kTimeseriesColumns[i];
    }
    out += '\n';
    for (const TimeseriesRow& r : rows) {
        const double values[] = {r.t, r.energy_u, r.energy_theta, r.hs_u, r.hsigma_theta};
        for (double v : values) {
            out += format_number(v);
            out += ',';
        }
        out += std::to_string(r.q);
        const double rest[] = {r.lambda, r.f, r.int_f, r.bkm, r.int_bkm, r.i1, r.i2, r.i3};
        for (double v : rest) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

std::string format_timeseries(const CriterionLedger& ledger) { return format_timeseries(ledger_rows(ledger)); }

void write_timeseries(const CriterionLedger& ledger, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << format_timeseries(ledger);
    if (!out) throw IoError("failed writing " + path.string());
}

namespace {

double parse_double(const std::string& cell, std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw Error("timeseries line " + std::to_string(line) + ": bad number '" + cell + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

std::vector<TimeseriesRow> parse_timeseries(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line)) throw Error("timeseries is empty");
    const auto header = split(line);
    if (header.size() != kTimeseriesColumns.size()) throw Error("timeseries header has wrong column count");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] != kTimeseriesColumns[i]) throw Error("timeseries header column '" + header[i] + "' unexpected");
    }
    std::vector<TimeseriesRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto c = split(line);
        if (c.size() != kTimeseriesColumns.size()) {
            throw Error("timeseries line " + std::to_string(lineno) + " has " + std::to_string(c.size()) +
                        " columns");
        }
        TimeseriesRow r;
        r.t = parse_double(c[0], lineno);
        r.energy_u = parse_double(c[1], lineno);
        r.energy_theta = parse_double(c[2], lineno);
        r.hs_u = parse_double(c[3], lineno);
        r.hsigma_theta = parse_double(c[4], lineno);
        r.q = static_cast<int>(parse_double(c[5], lineno));
        r.lambda = parse_double(c[6], lineno);
        r.f = parse_double(c[7], lineno);
        r.int_f = parse_double(c[8], lineno);
        r.bkm = parse_double(c[9], lineno);
        r.int_bkm = parse_double(c[10], lineno);
        r.i1 = parse_double(c[11], lineno);
        r.i2 = parse_double(c[12], lineno);
        r.i3 = parse_double(c[13], lineno);
        rows.push_back(r);
    }
    return rows;
}

std::vector<TimeseriesRow> read_timeseries(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_timeseries(buffer.str());
}

}  // namespace bqlp
