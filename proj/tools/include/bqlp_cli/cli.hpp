#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bqlp/ledger.hpp"
#include "bqlp/monitor.hpp"

namespace bqlp::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitRuntime = 2,
};

/// Entry point of the `bqlp` tool. Output goes to `out`, diagnostics and
/// usage text to `err`. The last line written to `out` is always a
/// space-separated list of key=value pairs starting with `status=`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

struct AnalyzeOptions {
    double s = 0.5;
    double sigma = -0.25;
    double c = 1.0;
    bool fluxes = true;
    std::optional<double> nu;
    std::optional<double> kappa;
};

/// Offline diagnostics of one snapshot, using the viscosity and diffusivity
/// stored in the file unless overridden.
DiagnosticsRecord analyze_snapshot(const std::filesystem::path& path, const AnalyzeOptions& options);

}  // namespace bqlp::cli
