#include "bqlp/transform.hpp"

#include <fftw3.h>

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bqlp/errors.hpp"

namespace bqlp {

namespace {

/// r2c/c2r plan pair for one cube size. Planned with FFTW_UNALIGNED so the
/// new-array execute interface accepts std::vector storage.
class PlanPair {
public:
    explicit PlanPair(int m) {
        std::vector<double> real(static_cast<std::size_t>(m) * m * m);
        std::vector<Complex> spectrum(static_cast<std::size_t>(m) * m * (m / 2 + 1));
        auto* cplx = reinterpret_cast<fftw_complex*>(spectrum.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        forward_ = fftw_plan_dft_r2c_3d(m, m, m, real.data(), cplx, flags);
        inverse_ = fftw_plan_dft_c2r_3d(m, m, m, cplx, real.data(), flags);
        if (forward_ == nullptr || inverse_ == nullptr) {
            throw Error("FFTW planning failed for size " + std::to_string(m));
        }
    }
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;
    ~PlanPair() {
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(inverse_);
    }

    void forward(const double* in, Complex* out) const {
        // Out-of-place r2c leaves its input untouched.
        fftw_execute_dft_r2c(forward_, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
    }
    /// Destroys `in`.
    void inverse(Complex* in, double* out) const {
        fftw_execute_dft_c2r(inverse_, reinterpret_cast<fftw_complex*>(in), out);
    }

private:
    fftw_plan forward_ = nullptr;
    fftw_plan inverse_ = nullptr;
};

int read_thread_env() {
    const char* env = std::getenv("BQLP_THREADS");
    if (env == nullptr) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

const PlanPair& plans_for(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PlanPair>> cache;
    static bool threads_initialised = false;

    std::lock_guard lock(mutex);
    if (!threads_initialised) {
        fftw_init_threads();
        fftw_plan_with_nthreads(transform_threads());
        threads_initialised = true;
    }
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<PlanPair>(m);
    return *slot;
}

}  // namespace

int transform_threads() {
    static const int threads = read_thread_env();
    return threads;
}

ScalarField forward_transform(const PhysicalField& physical, const GridSpec& grid) {
    if (physical.m != grid.n || physical.values.size() != grid.physical_size()) {
        throw ConfigError("grid.n", "physical array of " + std::to_string(physical.m) +
                                        "^3 samples does not match grid n = " + std::to_string(grid.n));
    }
    ScalarField out(grid);
    plans_for(grid.n).forward(physical.values.data(), out.coefficients().data());
    const double norm = 1.0 / static_cast<double>(grid.physical_size());
    out *= norm;
    return out;
}

PhysicalField inverse_transform(const ScalarField& field, int oversample) {
    if (oversample < 1) {
        throw ConfigError("grid.oversample_factor", "oversample must be >= 1");
    }
    const GridSpec& grid = field.grid();
    const int n = grid.n;
    const int m = oversample * n;
    const int mz = m / 2 + 1;
    PhysicalField out(m);

    std::vector<Complex> scratch;
    if (m == n) {
        auto c = field.coefficients();
        scratch.assign(c.begin(), c.end());
    } else {
        scratch.assign(static_cast<std::size_t>(m) * m * mz, Complex{});
        auto fine_index = [m](int k) { return ((k % m) + m) % m; };
        for (int ix = 0; ix < n; ++ix) {
            const int kx = grid.wavenumber(ix);
            const bool nyq_x = grid.is_nyquist(ix);
            for (int iy = 0; iy < n; ++iy) {
                const int ky = grid.wavenumber(iy);
                const bool nyq_y = grid.is_nyquist(iy);
                for (int iz = 0; iz < grid.nz_half(); ++iz) {
                    Complex value = field.at(ix, iy, iz);
                    if (value == Complex{}) continue;
                    if (grid.is_nyquist(iz)) value *= 0.5;
                    // A Nyquist coefficient spreads equally over +n/2 and -n/2.
                    const int nx_targets = nyq_x ? 2 : 1;
                    const int ny_targets = nyq_y ? 2 : 1;
                    const double share = 1.0 / (nx_targets * ny_targets);
                    for (int a = 0; a < nx_targets; ++a) {
                        const int fx = fine_index(a == 0 ? kx : -kx);
                        for (int b = 0; b < ny_targets; ++b) {
                            const int fy = fine_index(b == 0 ? ky : -ky);
                            scratch[(static_cast<std::size_t>(fx) * m + fy) * mz + iz] += share * value;
                        }
                    }
                }
            }
        }
    }
    plans_for(m).inverse(scratch.data(), out.values.data());
    return out;
}

}  // namespace bqlp
