#pragma once

#include <array>
#include <cstddef>

namespace mixbound {

// Uniform periodic grid on the box [-L, L)^dim used as a truncation of
// full space.  Physical nodes are x_j = -L + j*dx; the spectral lattice is
// xi_k = k*dxi with integer k in [-n/2, n/2) per axis and dxi = pi/L.
struct Grid {
    int dim = 2;          // 2 or 3
    int n = 0;            // points per axis (even)
    double half_width = 0.0;

    double dx() const { return 2.0 * half_width / n; }
    double dxi() const { return pi() / half_width; }
    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n);
        return s;
    }

    // Integer wavenumber for a storage index along one axis (FFT ordering:
    // 0,1,...,n/2-1,-n/2,...,-1).
    int wave(int storage_index) const {
        return storage_index < n / 2 ? storage_index : storage_index - n;
    }
    double xi(int storage_index) const { return wave(storage_index) * dxi(); }
    // Physical coordinate of a storage index along one axis.
    double x(int storage_index) const { return -half_width + storage_index * dx(); }

    // Decompose a flat row-major index (last axis fastest, FFTW layout).
    std::array<int, 3> unpack(std::size_t flat) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int a = dim - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(flat % n);
            flat /= static_cast<std::size_t>(n);
        }
        return idx;
    }

    bool operator==(const Grid&) const = default;

    static constexpr double pi() { return 3.14159265358979323846; }
};

// Validates and builds a grid.  Throws std::invalid_argument on bad input
// (dim outside {2,3}, odd or too-small n, nonpositive half width).
Grid make_grid(int dim, int n, double half_width);

}  // namespace mixbound
