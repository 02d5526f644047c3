#pragma once

#include "mixbound/field.hpp"

namespace mixbound {

// L2 norm via the spectral lattice with continuum normalization:
//   ( (2pi)^{-dim} * sum_k |coeffs[k]|^2 * dxi^dim )^{1/2}.
// Agrees with the physical-space quadrature norm by the discrete Parseval
// identity.  With exclude_zero_mode the k = 0 term is dropped.
double l2_norm(const SpectralField& f, bool exclude_zero_mode = false);

// Homogeneous H^1 seminorm: same sum with multiplier |xi_k|^2.
double grad_l2_norm(const SpectralField& f);

struct InvGradResult {
    double value = 0.0;
    // Set for dim == 2 inputs whose box mean is not numerically zero: the
    // negative-order norm is then dominated by unresolved large scales and
    // should not be trusted quantitatively.
    bool truncation_sensitive = false;
};

// Homogeneous H^{-1} seminorm: multiplier |xi_k|^{-2}; the zero mode is
// always excluded.
InvGradResult inv_grad_l2_norm(const SpectralField& f);

// Filamentation length lambda = |theta|_{H^-1} / |theta|_{L2}, both factors
// with the zero mode excluded.
double filamentation_length(const SpectralField& f);

// Spectral mass at or below radius delta:
//   F(delta) = sum_{|xi_k| <= delta} |coeffs[k]|^2 * dxi^dim
// (ties on the boundary shell and the zero mode are included), so that
// F(infinity) = (2pi)^dim * l2_norm^2.  Requires delta >= dxi: below the
// first shell the profile is unresolvable.
double low_mode_mass(const SpectralField& f, double delta);

// Max-norm of the spectrally computed divergence of a sampled vector field.
double divergence_max(const VectorSamples& v);

// Physical-space quadrature norm (dx^dim * sum_j v_j^2)^{1/2}.
double physical_l2(const ScalarSamples& s);

}  // namespace mixbound
