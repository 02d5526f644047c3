#include "mixbound/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace mixbound {

FitWindow window_from_fractions(double w0, double w1, double t_final) {
    if (!(w0 >= 0.0 && w0 < w1 && w1 <= 1.0)) {
        throw std::invalid_argument(
            "window_from_fractions: need 0 <= w0 < w1 <= 1");
    }
    if (!(t_final > 0.0)) {
        throw std::invalid_argument("window_from_fractions: t_final must be positive");
    }
    const double span = std::log1p(t_final);
    return FitWindow{std::expm1(w0 * span), std::expm1(w1 * span)};
}

FitResult fit_exponent(const std::vector<double>& t, const std::vector<double>& y,
                       const FitWindow& window, std::string quantity) {
    if (t.size() != y.size()) {
        throw std::invalid_argument("fit_exponent: t and y must have equal length");
    }
    if (!(window.t_begin <= window.t_end)) {
        throw std::invalid_argument("fit_exponent: malformed window");
    }
    // Tolerate endpoint rounding so a window mapped from fractions still
    // includes the boundary samples.
    const double pad = 1e-9 * (1.0 + std::abs(window.t_end));
    std::vector<double> lx, ly;
    FitResult out;
    out.quantity = std::move(quantity);
    bool first = true;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < window.t_begin - pad || t[i] > window.t_end + pad) continue;
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument(
                "fit_exponent: nonpositive value at t = " + std::to_string(t[i]) +
                " inside the fit window");
        }
        lx.push_back(std::log1p(t[i]));
        ly.push_back(std::log(y[i]));
        if (first) {
            out.t_begin = t[i];
            first = false;
        }
        out.t_end = t[i];
    }
    const std::size_t m = lx.size();
    if (m < 8) {
        throw std::invalid_argument(
            "fit_exponent: need at least 8 samples in the window [" +
            std::to_string(window.t_begin) + ", " + std::to_string(window.t_end) +
            "], got " + std::to_string(m));
    }
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mean_x = sx / static_cast<double>(m);
    const double mean_y = sy / static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = lx[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ly[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_exponent: all samples share one time value");
    }
    out.exponent = sxy / sxx;
    const double intercept = mean_y - out.exponent * mean_x;
    out.C = std::exp(intercept);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (intercept + out.exponent * lx[i]);
        ss_res += r * r;
    }
    out.std_error =
        m > 2 ? std::sqrt(ss_res / (static_cast<double>(m) - 2.0) / sxx) : 0.0;
    out.points = static_cast<int>(m);
    return out;
}

}  // namespace mixbound
