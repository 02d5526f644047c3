#pragma once

#include <cstdint>

#include "mixbound/field.hpp"

namespace mixbound {

enum class InitialFamily {
    gaussian,           // amplitude * exp(-|x|^2 / (2 sigma^2))
    dipole,             // d/dx1 of the gaussian (mean-free, odd in x1)
    fourier_power_law,  // |theta_hat(xi)| = amplitude * |xi|^a * taper(|xi|)
};

struct InitialDataSpec {
    InitialFamily family = InitialFamily::gaussian;
    double amplitude = 1.0;
    double sigma = 1.0;          // gaussian / dipole width
    double exponent = 0.0;       // power-law spectral exponent a
    double cutoff = 1.0;         // power-law flat region |xi| <= delta0
    double taper_width = 0.5;    // C-infinity roll-off over [delta0, delta0 + width]
    std::uint64_t seed = 0;      // power-law phase seed
};

// Samples the requested profile on the grid and returns its spectral
// coefficients.  Gaussian and dipole are sampled in physical space and
// transformed; the power law is built directly on the spectral lattice with
// conjugate-symmetric phases derived deterministically from (seed, k), so a
// given (spec, grid) pair reproduces bit-identical data in any order of
// evaluation.  Throws std::invalid_argument when the grid cannot resolve
// the profile (sigma < 3 dx, or cutoff < 8 dxi) or parameters are
// inadmissible (sigma <= 0, power-law exponent <= -dim/2).
SpectralField sample_initial_data(const InitialDataSpec& spec, const Grid& grid);

// Closed-form decay character of a catalog profile: the shell-mass profile
// F(delta) of the data scales like delta^(2 r* + dim) with r* = 0 for the
// gaussian, 1 for the dipole, a for the power law.
double analytic_decay_character(const InitialDataSpec& spec);

// C-infinity cutoff used by the power-law family: 1 below delta0, 0 above
// delta0 + width, smooth monotone bridge between.
double spectral_taper(double r, double delta0, double width);

}  // namespace mixbound
