#pragma once

#include <utility>
#include <vector>

#include "mixbound/field.hpp"

namespace mixbound {

/// Result of fitting the low-frequency mass profile F(delta) ~ delta^{2r+d}.
struct DecayCharacterEstimate {
    double r_star = 0.0;       ///< fitted decay character
    double std_error = 0.0;    ///< regression standard error propagated to r*
    double delta_min = 0.0;    ///< fit window lower edge
    double delta_max = 0.0;    ///< fit window upper edge
    std::vector<std::pair<double, double>> shells;  ///< (delta, F) points used
    int excluded_points = 0;   ///< profile entries dropped because F <= 0
    bool outside_admissible = false;  ///< r* <= -d/2: outside the theory's range
    bool non_power_law = false;       ///< residuals too large for a power law
};

/// Low-frequency mass F(delta) at each requested radius (zero mode included,
/// boundary shells included).  `deltas` must be sorted ascending and >= the
/// grid's frequency spacing.
std::vector<std::pair<double, double>> shell_profile(const SpectralField& f,
                                                     const std::vector<double>& deltas);

/// Least-squares slope s of log F against log delta over the profile;
/// r* = (s - d) / 2 since F(delta) ~ delta^{2 r* + d}.  Profile entries with
/// F <= 0 are dropped (counted in excluded_points); fewer than 4 usable
/// points is an error.  Exact power-law profiles are recovered to 1e-10.
DecayCharacterEstimate estimate_decay_character(
    const std::vector<std::pair<double, double>>& profile, int dim);

/// Closed-form shell integral of an exact power-law spectrum |theta_hat| =
/// |xi|^a: F(delta) = omega_{d-1} delta^{2a+d} / (2a+d), with omega_{d-1}
/// the unit-sphere area (2 pi for d=2, 4 pi for d=3).  Requires 2a + d > 0.
double oracle_F_power_law(double a, double delta, int dim);

/// Geometrically spaced shell radii in [delta_min, delta_max], endpoints
/// included; `count` >= 4.
std::vector<double> make_shell_deltas(double delta_min, double delta_max, int count);

}  // namespace mixbound
