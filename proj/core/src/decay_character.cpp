#include "mixbound/decay_character.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mixbound/norms.hpp"

namespace mixbound {

std::vector<std::pair<double, double>> shell_profile(const SpectralField& f,
                                                     const std::vector<double>& deltas) {
    const double dxi = f.grid.dxi();
    std::vector<std::pair<double, double>> profile;
    profile.reserve(deltas.size());
    double prev = 0.0;
    bool first = true;
    for (double delta : deltas) {
        if (!first && delta < prev) {
            throw std::invalid_argument("shell_profile: deltas must be sorted ascending");
        }
        if (delta < dxi) {
            throw std::invalid_argument(
                "shell_profile: shell radius " + std::to_string(delta) +
                " is below the frequency spacing " + std::to_string(dxi) +
                "; enlarge the box half-width to resolve it");
        }
        profile.emplace_back(delta, low_mode_mass(f, delta));
        prev = delta;
        first = false;
    }
    return profile;
}

DecayCharacterEstimate estimate_decay_character(
    const std::vector<std::pair<double, double>>& profile, int dim) {
    if (dim != 2 && dim != 3) {
        throw std::invalid_argument("estimate_decay_character: dim must be 2 or 3");
    }
    DecayCharacterEstimate est;
    std::vector<double> lx, ly;
    for (const auto& [delta, mass] : profile) {
        if (!(mass > 0.0)) {
            ++est.excluded_points;
            continue;
        }
        lx.push_back(std::log(delta));
        ly.push_back(std::log(mass));
        est.shells.emplace_back(delta, mass);
    }
    const std::size_t m = lx.size();
    if (m < 4) {
        throw std::invalid_argument(
            "estimate_decay_character: need at least 4 shells with positive mass, got " +
            std::to_string(m));
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
        const double dxc = lx[i] - mean_x;
        sxx += dxc * dxc;
        sxy += dxc * (ly[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("estimate_decay_character: degenerate window (all shells equal)");
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (intercept + slope * lx[i]);
        ss_res += r * r;
    }
    const double slope_err =
        m > 2 ? std::sqrt(ss_res / (static_cast<double>(m) - 2.0) / sxx) : 0.0;

    est.r_star = 0.5 * (slope - dim);
    est.std_error = 0.5 * slope_err;
    est.delta_min = est.shells.front().first;
    est.delta_max = est.shells.back().first;
    est.outside_admissible = est.r_star <= -0.5 * dim;
    est.non_power_law = est.std_error > 0.1;
    return est;
}

double oracle_F_power_law(double a, double delta, int dim) {
    if (dim != 2 && dim != 3) {
        throw std::invalid_argument("oracle_F_power_law: dim must be 2 or 3");
    }
    const double p = 2.0 * a + dim;
    if (p <= 0.0) {
        throw std::invalid_argument(
            "oracle_F_power_law: shell integral diverges for 2a + d = " +
            std::to_string(p) + " <= 0");
    }
    const double omega = dim == 2 ? 2.0 * Grid::pi() : 4.0 * Grid::pi();
    return omega * std::pow(delta, p) / p;
}

std::vector<double> make_shell_deltas(double delta_min, double delta_max, int count) {
    if (!(delta_min > 0.0) || !(delta_max > delta_min)) {
        throw std::invalid_argument("make_shell_deltas: need 0 < delta_min < delta_max");
    }
    if (count < 4) {
        throw std::invalid_argument("make_shell_deltas: need at least 4 shells");
    }
    std::vector<double> deltas(static_cast<std::size_t>(count));
    const double lmin = std::log(delta_min);
    const double lmax = std::log(delta_max);
    for (int i = 0; i < count; ++i) {
        const double s = static_cast<double>(i) / (count - 1);
        deltas[static_cast<std::size_t>(i)] = std::exp(lmin + s * (lmax - lmin));
    }
    deltas.front() = delta_min;
    deltas.back() = delta_max;
    return deltas;
}

}  // namespace mixbound
