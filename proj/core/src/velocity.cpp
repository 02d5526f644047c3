#include "mixbound/velocity.hpp"

#include <cmath>
#include <stdexcept>

namespace mixbound {

namespace {

// Composite Simpson over [0, hi] of f, resolving Gaussian tails easily.
template <typename F>
double simpson(F f, double hi, int intervals) {
    const double h = hi / intervals;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < intervals; i += 2) odd += f(i * h);
    for (int i = 2; i < intervals; i += 2) even += f(i * h);
    return (h / 3.0) * (f(0.0) + 4.0 * odd + 2.0 * even + f(hi));
}

struct FamilyConstants {
    double l2;        // ||V||_2
    double grad_sup;  // sup Frobenius norm of grad V
    double sup;       // sup |V|
};

FamilyConstants compute_constants(VelocityFamily family) {
    constexpr double R = 12.0;  // e^{-R^2} far below double precision
    constexpr int N = 6000;
    FamilyConstants c{};
    if (family == VelocityFamily::modified_shear) {
        // |V|^2 = e^{-r^2} r^2 in the plane.
        c.l2 = std::sqrt(2.0 * Grid::pi() *
                         simpson([](double r) { return std::exp(-r * r) * r * r * r; }, R, N));
        // |grad V|_F^2 = e^{-r^2} (2 - 2 r^2 + r^4), monotone decreasing.
        double best = 0.0;
        for (int i = 0; i <= 600000; ++i) {
            const double r = i * 1e-5;
            if (r > R) break;
            const double f =
                std::exp(-r * r) * (2.0 - 2.0 * r * r + r * r * r * r);
            if (f > best) best = f;
        }
        c.grad_sup = std::sqrt(best);
    } else {
        // |V|^2 = e^{-r^2} rho^2 with rho the cylindrical radius;
        // integrating out angles leaves (8 pi / 3) \int r^4 e^{-r^2} dr.
        c.l2 = std::sqrt(
            (8.0 * Grid::pi() / 3.0) *
            simpson([](double r) { return std::exp(-r * r) * r * r * r * r; }, R, N));
        // |grad V|_F^2 = e^{-rho^2 - z^2} (2 - 2 rho^2 + rho^4 + rho^2 z^2);
        // for fixed rho the maximum over w = z^2 is explicit.
        double best = 0.0;
        for (int i = 0; i <= 600000; ++i) {
            const double rho = i * 1e-5;
            if (rho > R) break;
            const double rho2 = rho * rho;
            const double base = 2.0 - 2.0 * rho2 + rho2 * rho2;
            double f = std::exp(-rho2) * base;  // z = 0
            if (rho2 > 0.0 && rho2 > base) {
                const double w = 1.0 - base / rho2;  // interior critical point
                f = std::max(f, std::exp(-rho2 - w) * (base + rho2 * w));
            }
            if (f > best) best = f;
        }
        c.grad_sup = std::sqrt(best);
    }
    // Both families: |V| = rho e^{-r^2/2} maximized on the z = 0 circle.
    double best = 0.0;
    for (int i = 0; i <= 600000; ++i) {
        const double r = i * 1e-5;
        if (r > R) break;
        best = std::max(best, r * std::exp(-r * r / 2.0));
    }
    c.sup = best;
    return c;
}

const FamilyConstants& constants(VelocityFamily family) {
    static const FamilyConstants shear = compute_constants(VelocityFamily::modified_shear);
    static const FamilyConstants swirl = compute_constants(VelocityFamily::gaussian_swirl3d);
    return family == VelocityFamily::modified_shear ? shear : swirl;
}

}  // namespace

double velocity_envelope(const VelocityFieldSpec& spec, double t) {
    return spec.amplitude * std::pow(1.0 + t, -spec.nu.value());
}

VelocityRates velocity_rates(const VelocityFieldSpec& spec) {
    return VelocityRates{spec.nu.value(), spec.nu.value()};
}

VectorSamples sample_velocity(const VelocityFieldSpec& spec, double t, const Grid& grid) {
    if (grid.dim != spec.dim()) {
        throw std::invalid_argument(
            "sample_velocity: velocity family lives in dimension " +
            std::to_string(spec.dim()) + " but the grid has dimension " +
            std::to_string(grid.dim));
    }
    const double env = velocity_envelope(spec, t);
    VectorSamples u(grid);
    const int n = grid.n;
    std::size_t flat = 0;
    if (grid.dim == 2) {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j, ++flat) {
                const double y = grid.x(j);
                const double g = env * std::exp(-(x * x + y * y) / 2.0);
                u.components[0][flat] = -y * g;
                u.components[1][flat] = x * g;
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j) {
                const double y = grid.x(j);
                for (int k = 0; k < n; ++k, ++flat) {
                    const double z = grid.x(k);
                    const double g = env * std::exp(-(x * x + y * y + z * z) / 2.0);
                    u.components[0][flat] = -y * g;
                    u.components[1][flat] = x * g;
                    u.components[2][flat] = 0.0;
                }
            }
        }
    }
    return u;
}

std::vector<std::vector<double>> sample_velocity_gradient(const VelocityFieldSpec& spec,
                                                          double t, const Grid& grid) {
    if (grid.dim != spec.dim()) {
        throw std::invalid_argument(
            "sample_velocity_gradient: velocity family lives in dimension " +
            std::to_string(spec.dim()) + " but the grid has dimension " +
            std::to_string(grid.dim));
    }
    const double env = velocity_envelope(spec, t);
    const int d = grid.dim;
    const int n = grid.n;
    std::vector<std::vector<double>> jac(static_cast<std::size_t>(d * d),
                                         std::vector<double>(grid.size()));
    std::size_t flat = 0;
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j, ++flat) {
                const double y = grid.x(j);
                const double g = env * std::exp(-(x * x + y * y) / 2.0);
                jac[0][flat] = x * y * g;          // d_x u^1
                jac[1][flat] = (1.0 - x * x) * g;  // d_x u^2
                jac[2][flat] = (y * y - 1.0) * g;  // d_y u^1
                jac[3][flat] = -x * y * g;         // d_y u^2
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double x = grid.x(i);
            for (int j = 0; j < n; ++j) {
                const double y = grid.x(j);
                for (int k = 0; k < n; ++k, ++flat) {
                    const double z = grid.x(k);
                    const double g = env * std::exp(-(x * x + y * y + z * z) / 2.0);
                    jac[0][flat] = x * y * g;          // d_x u^1
                    jac[1][flat] = (1.0 - x * x) * g;  // d_x u^2
                    jac[2][flat] = 0.0;                // d_x u^3
                    jac[3][flat] = (y * y - 1.0) * g;  // d_y u^1
                    jac[4][flat] = -x * y * g;         // d_y u^2
                    jac[5][flat] = 0.0;                // d_y u^3
                    jac[6][flat] = y * z * g;          // d_z u^1
                    jac[7][flat] = -x * z * g;         // d_z u^2
                    jac[8][flat] = 0.0;                // d_z u^3
                }
            }
        }
    }
    return jac;
}

double velocity_l2(const VelocityFieldSpec& spec, double t) {
    return velocity_envelope(spec, t) * constants(spec.family).l2;
}

double grad_velocity_sup(const VelocityFieldSpec& spec, double t) {
    return velocity_envelope(spec, t) * constants(spec.family).grad_sup;
}

double velocity_sup(const VelocityFieldSpec& spec, double t) {
    return velocity_envelope(spec, t) * constants(spec.family).sup;
}

}  // namespace mixbound
