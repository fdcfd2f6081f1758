#include "bqlp/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "bqlp/diagnostics.hpp"
#include "bqlp/errors.hpp"

namespace bqlp {

namespace {

using nlohmann::json;

class Reader {
public:
    Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "must be a JSON object");
    }

    std::string key(const std::string& name) const { return path_.empty() ? name : path_ + "." + name; }

    bool has(const std::string& name) const {
        seen_.insert(name);
        return node_.contains(name) && !node_.at(name).is_null();
    }

    double number(const std::string& name) const {
        if (!has(name)) throw ConfigError(key(name), "required field is missing");
        const json& v = node_.at(name);
        if (!v.is_number()) throw ConfigError(key(name), "must be a number");
        return v.get<double>();
    }
    double number(const std::string& name, double fallback) const { return has(name) ? number(name) : fallback; }

    long long integer(const std::string& name) const {
        if (!has(name)) throw ConfigError(key(name), "required field is missing");
        const json& v = node_.at(name);
        if (!v.is_number_integer()) throw ConfigError(key(name), "must be an integer");
        return v.get<long long>();
    }
    long long integer(const std::string& name, long long fallback) const {
        return has(name) ? integer(name) : fallback;
    }

    std::string string(const std::string& name, const std::string& fallback) const {
        if (!has(name)) return fallback;
        const json& v = node_.at(name);
        if (!v.is_string()) throw ConfigError(key(name), "must be a string");
        return v.get<std::string>();
    }

    bool boolean(const std::string& name, bool fallback) const {
        if (!has(name)) return fallback;
        const json& v = node_.at(name);
        if (!v.is_boolean()) throw ConfigError(key(name), "must be true or false");
        return v.get<bool>();
    }

    std::optional<Reader> child(const std::string& name) const {
        if (!has(name)) return std::nullopt;
        return Reader(node_.at(name), key(name));
    }
    Reader required_child(const std::string& name) const {
        if (!has(name)) throw ConfigError(key(name), "required section is missing");
        return Reader(node_.at(name), key(name));
    }

    const json& raw(const std::string& name) const {
        seen_.insert(name);
        return node_.at(name);
    }

    /// Rejects keys that were never looked up.
    void finish() const {
        for (const auto& [k, v] : node_.items()) {
            if (!seen_.count(k)) throw ConfigError(key(k), "unknown field");
        }
    }

private:
    const json& node_;
    std::string path_;
    mutable std::set<std::string> seen_;
};

void require(bool ok, const std::string& field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

SolverParams RunConfig::solver_params() const {
    SolverParams p;
    p.nu = nu;
    p.kappa = kappa;
    p.dt = dt;
    p.t_end = t_end;
    p.cfl_limit = cfl_limit;
    p.diagnostics_stride = diagnostics_stride;
    p.hs_half_ceiling = hs_half_ceiling;
    return p;
}

DiagnosticsSettings RunConfig::diagnostics_settings() const {
    DiagnosticsSettings d;
    d.nu = nu;
    d.kappa = kappa;
    d.c = c;
    d.s = s;
    d.sigma = sigma;
    d.compute_fluxes = compute_fluxes;
    d.gronwall = gronwall;
    return d;
}

RunConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<parse>", e.what());
    }
    const Reader root(doc, "");
    RunConfig cfg;

    {
        const Reader grid = root.required_child("grid");
        const long long n = grid.integer("n");
        require(n >= 8 && n <= (1 << 12) && is_power_of_two(static_cast<int>(n)), "grid.n",
                "must be a power of two >= 8");
        cfg.grid.n = static_cast<int>(n);
        cfg.grid.dealias_fraction = grid.number("dealias_fraction", 2.0 / 3.0);
        const long long over = grid.integer("oversample_factor", 2);
        require(over >= 1 && over <= 16, "grid.oversample_factor", "must be an integer in [1, 16]");
        cfg.grid.oversample_factor = static_cast<int>(over);
        grid.finish();
        cfg.grid.validate();
    }
    {
        const Reader phys = root.required_child("physics");
        cfg.nu = phys.number("nu");
        require(std::isfinite(cfg.nu) && cfg.nu >= 0.0, "physics.nu", "must be finite and >= 0");
        cfg.kappa = phys.number("kappa");
        require(std::isfinite(cfg.kappa) && cfg.kappa >= 0.0, "physics.kappa", "must be finite and >= 0");
        cfg.c = phys.number("c", 1.0);
        require(finite_positive(cfg.c), "physics.c", "must be > 0");
        phys.finish();
    }
    if (const auto ex = root.child("exponents")) {
        cfg.s = ex->number("s", 0.5);
        cfg.sigma = ex->number("sigma", -0.25);
        ex->finish();
    }
    try {
        regularity_monitor(cfg.s, cfg.sigma);
    } catch (const ParameterError& e) {
        const bool s_bad = !(cfg.s >= 0.5 && cfg.s < 1.0);
        throw ConfigError(s_bad ? "exponents.s" : "exponents.sigma", e.what());
    }
    {
        const Reader time = root.required_child("time");
        cfg.dt = time.number("dt");
        require(finite_positive(cfg.dt), "time.dt", "must be > 0");
        cfg.t_end = time.number("t_end");
        require(finite_positive(cfg.t_end), "time.t_end", "must be > 0");
        const long long stride = time.integer("diagnostics_stride", 10);
        require(stride >= 1 && stride <= 1'000'000'000, "time.diagnostics_stride", "must be an integer >= 1");
        cfg.diagnostics_stride = static_cast<int>(stride);
        cfg.cfl_limit = time.number("cfl_limit", 0.5);
        require(cfg.cfl_limit > 0.0 && cfg.cfl_limit <= 1.0, "time.cfl_limit", "must lie in (0, 1]");
        time.finish();
    }
    if (const auto ic = root.child("initial_condition")) {
        const std::string kind = ic->string("kind", "taylor_green");
        const auto parsed = parse_initial_kind(kind);
        require(parsed.has_value(), "initial_condition.kind",
                "must be one of taylor_green, random_band, thermal_bubble, zero_theta_ns");
        cfg.initial.kind = *parsed;
        cfg.initial.amplitude = ic->number("amplitude", 1.0);
        cfg.initial.theta_amplitude = ic->number("theta_amplitude", 0.0);
        cfg.initial.bubble_radius = ic->number("bubble_radius", 0.5);
        if (ic->has("band")) {
            const json& band = ic->raw("band");
            require(band.is_array() && band.size() == 2 && band[0].is_number() && band[1].is_number(),
                    "initial_condition.band", "must be a two-element array [k_lo, k_hi]");
            cfg.initial.band = {band[0].get<double>(), band[1].get<double>()};
        }
        if (ic->has("bubble_center")) {
            const json& c = ic->raw("bubble_center");
            require(c.is_array() && c.size() == 3 && c[0].is_number() && c[1].is_number() && c[2].is_number(),
                    "initial_condition.bubble_center", "must be a three-element array");
            cfg.initial.bubble_center = {c[0].get<double>(), c[1].get<double>(), c[2].get<double>()};
        }
        ic->finish();
    }
    if (root.has("seed")) {
        const json& seed = root.raw("seed");
        require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<long long>() >= 0), "seed",
                "must be a non-negative integer");
        cfg.seed = seed.get<std::uint64_t>();
    }
    cfg.initial.seed = cfg.seed;
    cfg.initial.validate(cfg.grid);

    if (const auto out = root.child("output")) {
        cfg.output.directory = out->string("directory", cfg.output.directory.string());
        require(!cfg.output.directory.empty(), "output.directory", "must not be empty");
        const long long stride = out->integer("snapshot_stride", 0);
        require(stride >= 0, "output.snapshot_stride", "must be >= 0");
        cfg.output.snapshot_stride = static_cast<int>(stride);
        if (out->has("formats")) {
            const json& formats = out->raw("formats");
            require(formats.is_array(), "output.formats", "must be an array of strings");
            cfg.output.csv = false;
            cfg.output.svg = false;
            for (const auto& f : formats) {
                require(f.is_string(), "output.formats", "must be an array of strings");
                const std::string name = f.get<std::string>();
                if (name == "csv") {
                    cfg.output.csv = true;
                } else if (name == "svg") {
                    cfg.output.svg = true;
                } else {
                    throw ConfigError("output.formats", "unknown format '" + name + "' (expected csv, svg)");
                }
            }
        }
        out->finish();
    }
    if (const auto diag = root.child("diagnostics")) {
        cfg.compute_fluxes = diag->boolean("fluxes", true);
        diag->finish();
    }
    if (const auto guard = root.child("guard")) {
        cfg.hs_half_ceiling = guard->number("hs_half_ceiling", cfg.hs_half_ceiling);
        require(cfg.hs_half_ceiling > 0.0, "guard.hs_half_ceiling", "must be > 0");
        guard->finish();
    }
    if (const auto g = root.child("gronwall")) {
        GronwallConstants constants;
        constants.rate = g->number("rate");
        require(std::isfinite(constants.rate) && constants.rate >= 0.0, "gronwall.rate", "must be finite and >= 0");
        constants.source = g->number("source", 0.0);
        require(std::isfinite(constants.source) && constants.source >= 0.0, "gronwall.source",
                "must be finite and >= 0");
        g->finish();
        cfg.gronwall = constants;
    }
    root.finish();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace bqlp
