#pragma once

#include <string>
#include <vector>

namespace mixbound {

/// Power-law fit y ~ C (1+t)^{exponent} by least squares on
/// (log(1+t), log y).
struct FitResult {
    std::string quantity;    ///< series label (CSV column name)
    double exponent = 0.0;   ///< fitted slope in (1+t)
    double std_error = 0.0;  ///< regression standard error of the slope
    double C = 0.0;          ///< fitted multiplicative constant
    double t_begin = 0.0;    ///< first time inside the fit window
    double t_end = 0.0;      ///< last time inside the fit window
    int points = 0;          ///< samples used
};

/// Absolute time window [t_begin, t_end], both ends inclusive.
struct FitWindow {
    double t_begin = 0.0;
    double t_end = 0.0;
};

/// Map window fractions [w0, w1] of logarithmic time u = log(1+t), with the
/// sampled range [0, t_final], to an absolute window.  Requires
/// 0 <= w0 < w1 <= 1.
FitWindow window_from_fractions(double w0, double w1, double t_final);

/// Fit y ~ C (1+t)^s over the samples falling inside the window.  Requires at
/// least 8 usable points and positive y throughout the window; exact power
/// laws are recovered to machine precision.
FitResult fit_exponent(const std::vector<double>& t, const std::vector<double>& y,
                       const FitWindow& window, std::string quantity = "");

}  // namespace mixbound
