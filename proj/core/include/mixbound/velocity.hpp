#pragma once

#include "mixbound/field.hpp"
#include "mixbound/grid.hpp"
#include "mixbound/rational.hpp"

namespace mixbound {

/// Divergence-free velocity catalog.  Every family is separable,
/// u(x, t) = A (1+t)^{-nu} V(x), so the decay rates of ||u(t)||_2 and
/// ||grad u(t)||_inf coincide (alpha = nu).
enum class VelocityFamily {
    /// d = 2 swirl: V = e^{-(x^2+y^2)/2} (-y, x).
    modified_shear,
    /// d = 3: V = e^{-|x|^2/2} (-y, x, 0), the curl of a Gaussian stream
    /// vector aligned with the z axis.
    gaussian_swirl3d,
};

struct VelocityFieldSpec {
    VelocityFamily family = VelocityFamily::modified_shear;
    /// Envelope exponent: u decays like (1+t)^{-nu}.  Exact rational so
    /// nu = 1 can be dispatched precisely where formulas change branch.
    Rational nu{1, 1};
    double amplitude = 1.0;

    /// Spatial dimension the family lives in (2 for modified_shear,
    /// 3 for gaussian_swirl3d).
    int dim() const {
        return family == VelocityFamily::modified_shear ? 2 : 3;
    }

    /// Time-independent variant of a base family (envelope frozen at 1).
    static VelocityFieldSpec frozen(VelocityFamily base, double amplitude = 1.0) {
        return VelocityFieldSpec{base, Rational{0, 1}, amplitude};
    }
};

struct VelocityRates {
    double alpha = 0.0;  ///< decay exponent of ||u(t)||_2 and ||grad u(t)||_inf
    double nu = 0.0;     ///< envelope exponent
};

/// Both rates; alpha == nu for every catalog family.
VelocityRates velocity_rates(const VelocityFieldSpec& spec);

/// Velocity samples at time t on the grid nodes: A (1+t)^{-nu} V(x_j).
/// Throws std::invalid_argument if the grid dimension does not match the
/// family's dimension.
VectorSamples sample_velocity(const VelocityFieldSpec& spec, double t, const Grid& grid);

/// ||u(t)||_{L^2} = A ||V||_2 (1+t)^{-nu}; ||V||_2 evaluated once per family
/// by fine radial quadrature and cached (shear: sqrt(pi), swirl: pi^{3/4}).
double velocity_l2(const VelocityFieldSpec& spec, double t);

/// sup_x |grad u(x,t)|_F (Frobenius norm of the Jacobian)
/// = A ||grad V||_inf (1+t)^{-nu}, cached fine 1-d search per family.
double grad_velocity_sup(const VelocityFieldSpec& spec, double t);

/// sup_x |u(x,t)| = A sup|V| (1+t)^{-nu}; used for advective CFL limits.
double velocity_sup(const VelocityFieldSpec& spec, double t);

/// Scalar envelope A (1+t)^{-nu} shared by all the closed forms above.
double velocity_envelope(const VelocityFieldSpec& spec, double t);

/// Analytic Jacobian samples: component [a*dim + i] holds d_a u^i on the grid
/// nodes (a = derivative axis, i = velocity component), envelope included.
/// Same dimension check as sample_velocity.
std::vector<std::vector<double>> sample_velocity_gradient(const VelocityFieldSpec& spec,
                                                          double t, const Grid& grid);

}  // namespace mixbound
