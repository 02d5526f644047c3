#pragma once

#include <complex>
#include <vector>

#include "mixbound/grid.hpp"

namespace mixbound {

// Real scalar samples on the physical nodes of a grid, row-major.
struct ScalarSamples {
    Grid grid;
    std::vector<double> values;

    ScalarSamples() = default;
    explicit ScalarSamples(const Grid& g) : grid(g), values(g.size(), 0.0) {}
};

// Continuum-normalized Fourier coefficients on the spectral lattice:
// coeffs[k] approximates the integral of theta(x) e^{-i xi_k . x} over the
// box, so a constant field c has zero mode c*(2L)^dim.  Conjugate symmetry
// is maintained by construction (fields enter through real samples).
struct SpectralField {
    Grid grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g), coeffs(g.size(), {0.0, 0.0}) {}
};

// Real vector field samples, one component array per space dimension.
struct VectorSamples {
    Grid grid;
    std::vector<std::vector<double>> components;

    VectorSamples() = default;
    explicit VectorSamples(const Grid& g)
        : grid(g),
          components(static_cast<std::size_t>(g.dim), std::vector<double>(g.size(), 0.0)) {}
};

// Throws std::invalid_argument if any stored value is non-finite.
void check_finite(const ScalarSamples& s, const char* what);
void check_finite(const SpectralField& f, const char* what);

}  // namespace mixbound
