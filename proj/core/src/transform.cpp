#include "mixbound/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace mixbound {

namespace {

// Cached FFTW plans, one per (dim, n, direction).  Plans use FFTW_ESTIMATE
// so the chosen algorithm never depends on runtime measurements (bit-level
// reproducibility) and FFTW_UNALIGNED so they can be re-executed on any
// heap buffer via the new-array interface.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int dim, int n, int direction) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(dim, n, direction);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t total = 1;
        for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
        fftw_complex* in = fftw_alloc_complex(total);
        fftw_complex* out = fftw_alloc_complex(total);
        int dims[3] = {n, n, n};
        fftw_plan plan = fftw_plan_dft(dim, dims, in, out, direction,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

// Parity of the sum of storage indices of a flat index.  For even n this
// equals the parity of the sum of integer wavenumbers, giving the phase
// e^{+-i pi sum(k)} that shifts the transform origin to x = -L.
inline int index_parity(std::size_t flat, int dim, int n) {
    int p = 0;
    for (int a = 0; a < dim; ++a) {
        p ^= static_cast<int>(flat % static_cast<std::size_t>(n)) & 1;
        flat /= static_cast<std::size_t>(n);
    }
    return p;
}

}  // namespace

SpectralField forward(const ScalarSamples& samples) {
    const Grid& g = samples.grid;
    const std::size_t total = g.size();
    SpectralField field(g);

    std::vector<std::complex<double>> in(total), out(total);
    for (std::size_t i = 0; i < total; ++i) in[i] = samples.values[i];

    fftw_plan plan = PlanCache::instance().get(g.dim, g.n, FFTW_FORWARD);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    double scale = 1.0;
    for (int a = 0; a < g.dim; ++a) scale *= g.dx();
    for (std::size_t i = 0; i < total; ++i) {
        double s = index_parity(i, g.dim, g.n) ? -scale : scale;
        field.coeffs[i] = s * out[i];
    }
    return field;
}

ScalarSamples inverse(const SpectralField& field) {
    const Grid& g = field.grid;
    const std::size_t total = g.size();
    ScalarSamples samples(g);

    std::vector<std::complex<double>> in(total), out(total);
    for (std::size_t i = 0; i < total; ++i) {
        in[i] = index_parity(i, g.dim, g.n) ? -field.coeffs[i] : field.coeffs[i];
    }

    fftw_plan plan = PlanCache::instance().get(g.dim, g.n, FFTW_BACKWARD);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    double scale = 1.0;
    for (int a = 0; a < g.dim; ++a) scale /= 2.0 * g.half_width;
    for (std::size_t i = 0; i < total; ++i) samples.values[i] = scale * out[i].real();
    return samples;
}

}  // namespace mixbound
