#include "bqlp/grid.hpp"

#include <string>

#include "bqlp/errors.hpp"

namespace bqlp {

bool is_power_of_two(int v) noexcept { return v > 0 && (v & (v - 1)) == 0; }

void GridSpec::validate() const {
    if (n < 8 || !is_power_of_two(n)) {
        throw ConfigError("grid.n", "must be a power of two >= 8 (got " + std::to_string(n) + ")");
    }
    if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0)) {
        throw ConfigError("grid.dealias_fraction", "must lie in (0, 1]");
    }
    if (oversample_factor < 1) {
        throw ConfigError("grid.oversample_factor", "must be an integer >= 1");
    }
}

}  // namespace bqlp
