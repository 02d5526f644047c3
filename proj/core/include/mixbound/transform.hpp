#pragma once

#include "mixbound/field.hpp"

namespace mixbound {

// Discrete approximation of the continuum Fourier transform on the box:
//   coeffs[k] = dx^dim * sum_j theta(x_j) e^{-i xi_k . x_j}.
// forward(inverse(f)) and inverse(forward(s)) recover the input to roundoff.
SpectralField forward(const ScalarSamples& samples);

// Inverse transform: theta(x_j) = (2pi)^{-dim} * dxi^dim * sum_k coeffs[k]
// e^{+i xi_k . x_j}; the imaginary residue of a conjugate-symmetric input is
// discarded.
ScalarSamples inverse(const SpectralField& field);

}  // namespace mixbound
