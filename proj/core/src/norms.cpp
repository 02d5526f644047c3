#include "mixbound/norms.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mixbound/transform.hpp"

namespace mixbound {

namespace {

constexpr double kTwoPi = 2.0 * Grid::pi();

// Applies fn(flat_index, |xi|^2) over the whole spectral lattice.
template <typename Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
    const int n = g.n;
    if (g.dim == 2) {
        std::size_t flat = 0;
        for (int i = 0; i < n; ++i) {
            const double xi0 = g.xi(i);
            for (int j = 0; j < n; ++j, ++flat) {
                const double xi1 = g.xi(j);
                fn(flat, xi0 * xi0 + xi1 * xi1);
            }
        }
    } else {
        std::size_t flat = 0;
        for (int i = 0; i < n; ++i) {
            const double xi0 = g.xi(i);
            for (int j = 0; j < n; ++j) {
                const double xi1 = g.xi(j);
                const double r01 = xi0 * xi0 + xi1 * xi1;
                for (int k = 0; k < n; ++k, ++flat) {
                    const double xi2 = g.xi(k);
                    fn(flat, r01 + xi2 * xi2);
                }
            }
        }
    }
}

double lattice_measure(const Grid& g) {
    double m = 1.0;
    for (int a = 0; a < g.dim; ++a) m *= g.dxi() / kTwoPi;
    return m;
}

}  // namespace

double l2_norm(const SpectralField& f, bool exclude_zero_mode) {
    double sum = 0.0;
    for_each_mode(f.grid, [&](std::size_t flat, double) {
        sum += std::norm(f.coeffs[flat]);
    });
    if (exclude_zero_mode) sum -= std::norm(f.coeffs[0]);
    return std::sqrt(std::max(sum, 0.0) * lattice_measure(f.grid));
}

double grad_l2_norm(const SpectralField& f) {
    double sum = 0.0;
    for_each_mode(f.grid, [&](std::size_t flat, double xi2) {
        sum += xi2 * std::norm(f.coeffs[flat]);
    });
    return std::sqrt(sum * lattice_measure(f.grid));
}

InvGradResult inv_grad_l2_norm(const SpectralField& f) {
    double sum = 0.0;
    double max_abs = 0.0;
    for_each_mode(f.grid, [&](std::size_t flat, double xi2) {
        const double a = std::norm(f.coeffs[flat]);
        if (a > max_abs) max_abs = a;
        if (flat != 0) sum += a / xi2;
    });
    InvGradResult r;
    r.value = std::sqrt(sum * lattice_measure(f.grid));
    if (f.grid.dim == 2) {
        const double mean_mag = std::abs(f.coeffs[0]);
        r.truncation_sensitive = mean_mag > 1e-8 * std::sqrt(max_abs);
    }
    return r;
}

double filamentation_length(const SpectralField& f) {
    const double l2 = l2_norm(f, /*exclude_zero_mode=*/true);
    if (l2 == 0.0) {
        throw std::invalid_argument("filamentation_length: field has no nonzero mode");
    }
    return inv_grad_l2_norm(f).value / l2;
}

double low_mode_mass(const SpectralField& f, double delta) {
    const Grid& g = f.grid;
    if (delta < g.dxi()) {
        std::ostringstream os;
        os << "low_mode_mass: delta = " << delta << " is below the first shell dxi = "
           << g.dxi() << " and unresolvable on this grid";
        throw std::invalid_argument(os.str());
    }
    const double d2 = delta * delta;
    double sum = 0.0;
    for_each_mode(g, [&](std::size_t flat, double xi2) {
        if (xi2 <= d2) sum += std::norm(f.coeffs[flat]);
    });
    double measure = 1.0;
    for (int a = 0; a < g.dim; ++a) measure *= g.dxi();
    return sum * measure;
}

double divergence_max(const VectorSamples& v) {
    const Grid& g = v.grid;
    const int n = g.n;
    SpectralField div_hat(g);
    for (int axis = 0; axis < g.dim; ++axis) {
        ScalarSamples comp(g);
        comp.values = v.components[static_cast<std::size_t>(axis)];
        SpectralField comp_hat = forward(comp);
        std::size_t flat = 0;
        if (g.dim == 2) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j, ++flat) {
                    const double xia = g.xi(axis == 0 ? i : j);
                    div_hat.coeffs[flat] +=
                        std::complex<double>(0.0, xia) * comp_hat.coeffs[flat];
                }
            }
        } else {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    for (int k = 0; k < n; ++k, ++flat) {
                        const double xia = g.xi(axis == 0 ? i : (axis == 1 ? j : k));
                        div_hat.coeffs[flat] +=
                            std::complex<double>(0.0, xia) * comp_hat.coeffs[flat];
                    }
                }
            }
        }
    }
    ScalarSamples div = inverse(div_hat);
    double m = 0.0;
    for (double d : div.values) m = std::max(m, std::abs(d));
    return m;
}

double physical_l2(const ScalarSamples& s) {
    double sum = 0.0;
    for (double v : s.values) sum += v * v;
    double measure = 1.0;
    for (int a = 0; a < s.grid.dim; ++a) measure *= s.grid.dx();
    return std::sqrt(sum * measure);
}

}  // namespace mixbound
