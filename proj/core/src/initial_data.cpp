#include "mixbound/initial_data.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mixbound/transform.hpp"

namespace mixbound {

namespace {

// splitmix64 finalizer; decorrelates consecutive inputs.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform phase in [0, 2pi) for a lattice mode, independent of traversal
// order: hash of the seed and the integer wave vector.
double mode_phase(std::uint64_t seed, const int* wave, int dim) {
    std::uint64_t h = mix64(seed ^ 0x6d69786210b5cULL);
    for (int a = 0; a < dim; ++a) {
        h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(wave[a])));
    }
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * Grid::pi() * u;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument("sample_initial_data: " + message);
}

SpectralField sample_physical_family(const InitialDataSpec& spec, const Grid& grid) {
    ScalarSamples s(grid);
    const double inv2s2 = 1.0 / (2.0 * spec.sigma * spec.sigma);
    const int n = grid.n;
    std::size_t flat = 0;
    if (grid.dim == 2) {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j, ++flat) {
                const double y = grid.x(j);
                const double e = std::exp(-(x * x + y * y) * inv2s2);
                s.values[flat] = spec.family == InitialFamily::gaussian
                                     ? spec.amplitude * e
                                     : spec.amplitude * (-x) * 2.0 * inv2s2 * e;
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j) {
                const double y = grid.x(j);
                for (int k = 0; k < n; ++k, ++flat) {
                    const double z = grid.x(k);
                    const double e = std::exp(-(x * x + y * y + z * z) * inv2s2);
                    s.values[flat] = spec.family == InitialFamily::gaussian
                                         ? spec.amplitude * e
                                         : spec.amplitude * (-x) * 2.0 * inv2s2 * e;
                }
            }
        }
    }
    SpectralField f = forward(s);
    if (spec.family == InitialFamily::dipole) {
        // Odd in x1, so the mean vanishes identically; clear the rounding
        // residue left by summation order.
        f.coeffs[0] = 0.0;
    }
    return f;
}

SpectralField sample_power_law(const InitialDataSpec& spec, const Grid& grid) {
    SpectralField f(grid);
    const int n = grid.n;
    const double support = spec.cutoff + spec.taper_width;

    // Canonical representative of the pair {k, -k}: first nonzero component
    // positive.  The mirror gets the conjugate coefficient; self-conjugate
    // modes (all components 0 or -n/2) are kept real.
    const auto canonical = [](const int* w, int dim) {
        for (int a = 0; a < dim; ++a) {
            if (w[a] > 0) return true;
            if (w[a] < 0) return false;
        }
        return false;  // zero mode, handled separately
    };

    int w[3] = {0, 0, 0};
    const std::size_t total = grid.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        const auto idx = grid.unpack(flat);
        double xi2 = 0.0;
        bool self_conjugate = true;
        for (int a = 0; a < grid.dim; ++a) {
            w[a] = grid.wave(idx[static_cast<std::size_t>(a)]);
            const double xia = w[a] * grid.dxi();
            xi2 += xia * xia;
            if (w[a] != 0 && w[a] != -n / 2) self_conjugate = false;
        }
        if (flat == 0) {
            // |xi|^a at xi = 0: finite only for a = 0 (flat spectrum).
            f.coeffs[0] = spec.exponent == 0.0 ? spec.amplitude : 0.0;
            continue;
        }
        const double r = std::sqrt(xi2);
        if (r >= support) continue;
        const double mag = spec.amplitude * std::pow(r, spec.exponent) *
                           spectral_taper(r, spec.cutoff, spec.taper_width);
        if (mag == 0.0) continue;
        if (self_conjugate) {
            f.coeffs[flat] = mag;
            continue;
        }
        const double sign = canonical(w, grid.dim) ? 1.0 : -1.0;
        int wc[3] = {sign > 0 ? w[0] : -w[0], sign > 0 ? w[1] : -w[1],
                     sign > 0 ? w[2] : -w[2]};
        const double phi = sign * mode_phase(spec.seed, wc, grid.dim);
        f.coeffs[flat] = std::complex<double>(mag * std::cos(phi), mag * std::sin(phi));
    }
    return f;
}

}  // namespace

double spectral_taper(double r, double delta0, double width) {
    if (r <= delta0) return 1.0;
    if (r >= delta0 + width) return 0.0;
    // Standard smooth partition bump: h(s)/(h(s) + h(1-s)) with
    // h(s) = exp(-1/s), equal to 1 at s = 0 and 0 at s = 1.
    const double s = (r - delta0) / width;
    const double a = std::exp(-1.0 / (1.0 - s));
    const double b = std::exp(-1.0 / s);
    return a / (a + b);
}

SpectralField sample_initial_data(const InitialDataSpec& spec, const Grid& grid) {
    std::ostringstream need;
    switch (spec.family) {
        case InitialFamily::gaussian:
        case InitialFamily::dipole: {
            require(spec.sigma > 0.0, "sigma must be positive");
            const double dx = grid.dx();
            if (spec.sigma < 3.0 * dx) {
                const int n_needed = static_cast<int>(
                    std::ceil(2.0 * grid.half_width * 3.0 / spec.sigma));
                need << "profile width sigma = " << spec.sigma
                     << " is under-resolved (requires sigma >= 3 dx = " << 3.0 * dx
                     << "); increase n to >= " << n_needed
                     << " or reduce half_width below " << spec.sigma * grid.n / 6.0;
                throw std::invalid_argument("sample_initial_data: " + need.str());
            }
            return sample_physical_family(spec, grid);
        }
        case InitialFamily::fourier_power_law: {
            require(spec.exponent > -0.5 * grid.dim,
                    "power-law exponent must exceed -dim/2 for finite mass");
            require(spec.cutoff > 0.0 && spec.taper_width > 0.0,
                    "cutoff and taper width must be positive");
            const double dxi = grid.dxi();
            if (spec.cutoff < 8.0 * dxi) {
                need << "spectral cutoff " << spec.cutoff
                     << " is under-resolved (requires cutoff >= 8 dxi = " << 8.0 * dxi
                     << "); increase half_width to >= "
                     << 8.0 * Grid::pi() / spec.cutoff;
                throw std::invalid_argument("sample_initial_data: " + need.str());
            }
            return sample_power_law(spec, grid);
        }
    }
    throw std::invalid_argument("sample_initial_data: unknown family");
}

double analytic_decay_character(const InitialDataSpec& spec) {
    switch (spec.family) {
        case InitialFamily::gaussian:
            return 0.0;
        case InitialFamily::dipole:
            return 1.0;
        case InitialFamily::fourier_power_law:
            return spec.exponent;
    }
    throw std::invalid_argument("analytic_decay_character: unknown family");
}

}  // namespace mixbound
