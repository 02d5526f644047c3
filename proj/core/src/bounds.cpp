#include "mixbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_params(const BoundParams& p, const char* who) {
    const std::string where(who);
    if (p.dim != 2 && p.dim != 3) {
        throw std::invalid_argument(where + ": dim must be 2 or 3, got " +
                                    std::to_string(p.dim));
    }
    if (!(p.r_star > -0.5 * p.dim)) {
        throw std::invalid_argument(where + ": decay character " +
                                    std::to_string(p.r_star) +
                                    " must exceed -d/2 = " +
                                    std::to_string(-0.5 * p.dim));
    }
    if (!(p.kappa > 0.0)) {
        throw std::invalid_argument(where + ": kappa must be positive");
    }
    if (!(p.C > 0.0)) {
        throw std::invalid_argument(where + ": constant C must be positive");
    }
}

GateCheck strict_gate(std::string name, double value, double threshold) {
    return GateCheck{std::move(name), value > threshold, value - threshold};
}

GateCheck weak_gate(std::string name, double value, double threshold) {
    return GateCheck{std::move(name), value >= threshold, value - threshold};
}

GateCheck strict_below_gate(std::string name, double value, double threshold) {
    return GateCheck{std::move(name), value < threshold, threshold - value};
}

std::vector<GateCheck> energy_lower_gates(const BoundParams& p) {
    return {
        strict_gate("r_star > -d/2", p.r_star, -0.5 * p.dim),
        strict_below_gate("r_star < 1", p.r_star, 1.0),
        strict_gate("alpha > r_star/2 + 1/2", p.alpha, 0.5 * p.r_star + 0.5),
        weak_gate("m >= d + 2", p.m.value(), p.dim + 2.0),
    };
}

std::vector<GateCheck> mix_norm_lower_gates(const BoundParams& p) {
    auto gates = energy_lower_gates(p);
    gates.push_back(strict_gate("r_star > 1 - d/2", p.r_star, 1.0 - 0.5 * p.dim));
    return gates;
}

// t_min for curves that inherit the scalar-floor validity condition; infinite
// when the alpha gate fails (no branch of the condition is active).
double inherited_t_min(const BoundParams& p) {
    if (!(p.alpha > 0.5 * p.r_star + 0.5) || p.r_star >= 1.0) return kInf;
    return validity_time_threshold(p).t_min;
}

}  // namespace

double BoundParams::n() const {
    return std::max(0.25 * dim + 0.5 * r_star, m.value());
}

double accumulated_decay(double t, double nu) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("accumulated_decay: t must be nonnegative");
    }
    if (!(nu >= 0.0)) {
        throw std::invalid_argument("accumulated_decay: nu must be nonnegative");
    }
    if (nu == 1.0) return std::log1p(t);
    return std::expm1((1.0 - nu) * std::log1p(t)) / (1.0 - nu);
}

double BoundCurve::evaluate(double t) const {
    double v = C * std::pow(1.0 + t, t_exponent);
    if (g_coefficient != 0.0) {
        v *= std::exp(g_coefficient * accumulated_decay(t, nu));
    }
    return v;
}

bool BoundCurve::applicable() const {
    for (const auto& g : gates) {
        if (!g.pass) return false;
    }
    return true;
}

std::vector<std::string> BoundCurve::violated_gates() const {
    std::vector<std::string> out;
    for (const auto& g : gates) {
        if (!g.pass) out.push_back(g.name);
    }
    return out;
}

BoundCurve BoundCurve::with_constant(double new_C) const {
    if (!(new_C > 0.0)) {
        throw std::invalid_argument("BoundCurve::with_constant: C must be positive");
    }
    BoundCurve c = *this;
    c.C = new_C;
    return c;
}

BoundCurve heat_lower_curve(const BoundParams& p) {
    validate_params(p, "heat_lower_curve");
    BoundCurve c;
    c.name = "heat_lower";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::T_l2;
    c.regime = "heat";
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = -(0.25 * p.dim + 0.5 * p.r_star);
    c.t_exponent = -(0.25 * p.dim + 0.5 * p.r_star);
    return c;
}

BoundCurve theta_upper_curve(const BoundParams& p) {
    validate_params(p, "theta_upper_curve");
    BoundCurve c;
    c.name = "energy_upper";
    c.direction = BoundDirection::upper;
    c.quantity = BoundQuantity::theta_l2;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = -p.n();
    c.t_exponent = -std::min(0.25 * p.dim + 0.5 * p.r_star, 0.25 * p.dim + 0.5);
    c.gates = {strict_gate("alpha > 1/2 - d/4", p.alpha, 0.5 - 0.25 * p.dim)};
    return c;
}

ValidityThreshold validity_time_threshold(const BoundParams& p) {
    validate_params(p, "validity_time_threshold");
    if (p.r_star >= 1.0) {
        throw std::invalid_argument(
            "validity_time_threshold: no scalar floor exists for r_star >= 1");
    }
    if (!(p.alpha > 0.5 * p.r_star + 0.5)) {
        throw std::invalid_argument(
            "validity_time_threshold: requires alpha > r_star/2 + 1/2; no "
            "branch of the validity condition is active");
    }
    ValidityThreshold out;
    if (p.alpha >= 1.5 - 0.5 * p.r_star) {
        out.branch = 'A';
        out.exponent = p.r_star - 1.0;
    } else {
        out.branch = 'B';
        out.exponent = 0.5 * p.r_star - p.alpha + 0.5;
    }
    const double K =
        std::pow(p.kappa, p.m.value() + 0.5 - 0.25 * p.dim - p.r_star);
    out.t_min = std::max(std::pow(K, 1.0 / out.exponent) - 1.0, 0.0);
    return out;
}

BoundCurve theta_lower_curve(const BoundParams& p) {
    validate_params(p, "theta_lower_curve");
    if (p.r_star >= 1.0) {
        throw std::invalid_argument(
            "theta_lower_curve: no lower bound is available for r_star >= 1");
    }
    BoundCurve c;
    c.name = "energy_lower";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::theta_l2;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = -(0.25 * p.dim + 0.5 * p.r_star);
    c.t_exponent = -(0.25 * p.dim + 0.5 * p.r_star);
    c.gates = energy_lower_gates(p);
    if (p.alpha > 0.5 * p.r_star + 0.5) {
        const auto threshold = validity_time_threshold(p);
        c.regime = std::string("branch ") + threshold.branch;
        c.t_min = threshold.t_min;
    } else {
        c.regime = "no active branch";
        c.t_min = kInf;
    }
    return c;
}

BoundCurve eta_upper_curve(const BoundParams& p) {
    validate_params(p, "eta_upper_curve");
    const double d = p.dim;
    double mass_exponent;  // decay exponent of ||eta||_2^2
    BoundCurve c;
    if (p.r_star <= 1.0) {
        mass_exponent = std::min(0.5 * d + 1.0, 0.5 * d + 0.5 * p.r_star + p.alpha - 0.5);
        c.regime = "r_star<=1";
    } else {
        mass_exponent = std::min(0.5 * d + 1.0, 0.5 * d + p.alpha);
        c.regime = "r_star>=1";
    }
    c.name = "remainder_upper";
    c.direction = BoundDirection::upper;
    c.quantity = BoundQuantity::eta_l2;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = -0.5 * (p.m.value() + 0.25 * d + 0.5);
    c.t_exponent = -0.5 * mass_exponent;
    c.gates = {
        strict_gate("alpha > max(1/2 - d/4, 1 - d/4 - r_star/2)", p.alpha,
                    std::max(0.5 - 0.25 * d, 1.0 - 0.25 * d - 0.5 * p.r_star)),
        weak_gate("m >= d/2 + 1", p.m.value(), 0.5 * d + 1.0),
    };
    return c;
}

BoundCurve grad_upper_curve(const BoundParams& p) {
    validate_params(p, "grad_upper_curve");
    const double d = p.dim;
    BoundCurve c;
    c.name = "gradient_upper";
    c.direction = BoundDirection::upper;
    c.quantity = BoundQuantity::grad_l2;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = -p.n() - 0.5;
    c.nu = p.nu.value();
    if (p.nu.is_one()) {
        c.regime = "nu=1";
        c.t_exponent = -std::min(0.25 * d + 0.5 * p.r_star + 0.5, 0.25 * d + 1.0);
        c.g_coefficient = 0.0;
    } else if (p.nu.value() > 1.0) {
        c.regime = "nu>1";
        c.t_exponent = -std::min(0.25 * d + 0.5 * p.r_star + 0.5, 0.25 * d + 1.0);
        c.g_coefficient = 1.0;
        c.note = "growth factor bounded by e^{1/(nu-1)}";
    } else {
        c.regime = "nu<1";
        c.t_exponent = -std::min(0.25 * d + 0.5 * p.r_star + 1.5, 0.25 * d + 2.0);
        c.g_coefficient = 1.0;
        c.note = "growth factor unbounded as t -> infinity";
    }
    c.gates = {strict_gate("alpha > 1/2 - d/4", p.alpha, 0.5 - 0.25 * d)};
    return c;
}

BoundCurve hm1_lower_curve(const BoundParams& p) {
    validate_params(p, "hm1_lower_curve");
    if (!(p.r_star > 1.0 - 0.5 * p.dim && p.r_star < 1.0)) {
        throw std::invalid_argument(
            "hm1_lower_curve: mix-norm of the initial data is finite only for "
            "r_star in (1 - d/2, 1); got r_star = " + std::to_string(p.r_star));
    }
    const double d = p.dim;
    BoundCurve c;
    c.name = "mix_norm_lower";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::invgrad_l2;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = p.m.value() + 0.5 - 0.5 * d - p.r_star;
    c.note = "kappa_power is informational only and never enters verdicts";
    c.nu = p.nu.value();
    const double base = -(0.25 * d + 0.5 * p.r_star);
    if (p.nu.is_one()) {
        c.regime = "nu=1";
        c.t_exponent = base + 0.5;
        c.g_coefficient = 0.0;
    } else if (p.nu.value() > 1.0) {
        c.regime = "nu>1";
        c.t_exponent = base + 0.5;
        c.g_coefficient = -1.0;
    } else {
        c.regime = "nu<1";
        c.t_exponent = base + 1.5;
        c.g_coefficient = -1.0;
    }
    c.gates = mix_norm_lower_gates(p);
    c.t_min = inherited_t_min(p);
    return c;
}

BoundCurve lambda_lower_curve(const BoundParams& p) {
    validate_params(p, "lambda_lower_curve");
    if (!(p.r_star > 1.0 - 0.5 * p.dim && p.r_star < 1.0)) {
        throw std::invalid_argument(
            "lambda_lower_curve: mix-norm of the initial data is finite only "
            "for r_star in (1 - d/2, 1); got r_star = " + std::to_string(p.r_star));
    }
    BoundCurve c;
    c.name = "filamentation_lower";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::lambda;
    c.C = p.C;
    c.kappa = p.kappa;
    c.kappa_power = p.m.value() + 0.5 - 0.25 * p.dim - 0.5 * p.r_star;
    c.note = "ratio of the mix-norm floor to the scalar ceiling; kappa_power "
             "is informational only";
    c.nu = p.nu.value();
    if (p.nu.is_one()) {
        c.regime = "nu=1";
        c.t_exponent = 0.5;
        c.g_coefficient = 0.0;
    } else if (p.nu.value() > 1.0) {
        c.regime = "nu>1";
        c.t_exponent = 0.5;
        c.g_coefficient = -1.0;
    } else {
        c.regime = "nu<1";
        c.t_exponent = 1.5;
        c.g_coefficient = -1.0;
    }
    c.gates = mix_norm_lower_gates(p);
    c.t_min = inherited_t_min(p);
    return c;
}

BoundCurve pure_advection_lambda_curve(const Rational& nu, double C0) {
    if (!(C0 > 0.0)) {
        throw std::invalid_argument(
            "pure_advection_lambda_curve: C0 must be positive (take "
            "C0 = lambda(0))");
    }
    if (nu.value() < 0.0) {
        throw std::invalid_argument("pure_advection_lambda_curve: nu must be nonnegative");
    }
    BoundCurve c;
    c.name = "pure_advection_lambda";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::lambda;
    c.C = C0;
    c.kappa = 0.0;
    c.nu = nu.value();
    if (nu.is_one()) {
        c.regime = "nu=1";
        c.t_exponent = -1.0;
        c.g_coefficient = 0.0;
    } else {
        c.regime = nu.value() > 1.0 ? "nu>1" : "nu<1";
        c.t_exponent = 0.0;
        c.g_coefficient = -1.0;
    }
    return c;
}

BoundCurve pure_diffusion_lambda_curve(double C) {
    if (!(C > 0.0)) {
        throw std::invalid_argument("pure_diffusion_lambda_curve: C must be positive");
    }
    BoundCurve c;
    c.name = "pure_diffusion_lambda";
    c.direction = BoundDirection::lower;
    c.quantity = BoundQuantity::lambda;
    c.regime = "diffusion";
    c.C = C;
    c.t_exponent = 0.5;
    return c;
}

AsymptoticClass asymptotic_class(EquationKind equation, const Rational& nu) {
    const double v = nu.value();
    if (v < 0.0) {
        throw std::invalid_argument("asymptotic_class: nu must be nonnegative");
    }
    switch (equation) {
        case EquationKind::pure_diffusion:
            return {AsymptoticKind::infinity, 0.0};
        case EquationKind::advection_diffusion:
            if (!nu.is_one() && v < 1.0) return {AsymptoticKind::zero, 0.0};
            return {AsymptoticKind::infinity, 0.0};
        case EquationKind::pure_advection:
            if (nu.is_one() || v < 1.0) return {AsymptoticKind::zero, 0.0};
            return {AsymptoticKind::finite, std::exp(-1.0 / (v - 1.0))};
    }
    throw std::invalid_argument("asymptotic_class: unknown equation kind");
}

AsymptoticClass classify_curve_limit(const BoundCurve& curve, double t_eval) {
    const double v = curve.evaluate(t_eval);
    if (!std::isfinite(v)) return {AsymptoticKind::infinity, 0.0};
    if (v < 1e-6) return {AsymptoticKind::zero, 0.0};
    if (v > 1e+6) return {AsymptoticKind::infinity, 0.0};
    // Values in the middle band may still be drifting polynomially; compare
    // against two decades earlier to separate bounded curves from slow
    // growth or decay.
    const double w = curve.evaluate(t_eval / 100.0);
    if (w > 0.0 && std::isfinite(w)) {
        const double ratio = v / w;
        if (ratio > 2.0) return {AsymptoticKind::infinity, 0.0};
        if (ratio < 0.5) return {AsymptoticKind::zero, 0.0};
    }
    return {AsymptoticKind::finite, v};
}

std::string result_id_name(ResultId id) {
    switch (id) {
        case ResultId::energy_lower: return "energy_lower";
        case ResultId::energy_upper: return "energy_upper";
        case ResultId::remainder_upper: return "remainder_upper";
        case ResultId::gradient_upper: return "gradient_upper";
        case ResultId::mix_norm_lower: return "mix_norm_lower";
        case ResultId::filamentation_lower: return "filamentation_lower";
    }
    return "unknown";
}

AssumptionVerdict assumption_check(const BoundParams& p, ResultId id) {
    AssumptionVerdict v;
    v.id = id;
    switch (id) {
        case ResultId::energy_upper:
            v.gates = {strict_gate("alpha > 1/2 - d/4", p.alpha, 0.5 - 0.25 * p.dim)};
            break;
        case ResultId::energy_lower:
            v.gates = energy_lower_gates(p);
            break;
        case ResultId::remainder_upper:
            v.gates = {
                strict_gate("alpha > max(1/2 - d/4, 1 - d/4 - r_star/2)", p.alpha,
                            std::max(0.5 - 0.25 * p.dim,
                                     1.0 - 0.25 * p.dim - 0.5 * p.r_star)),
                weak_gate("m >= d/2 + 1", p.m.value(), 0.5 * p.dim + 1.0),
            };
            break;
        case ResultId::gradient_upper:
            v.gates = {strict_gate("alpha > 1/2 - d/4", p.alpha, 0.5 - 0.25 * p.dim)};
            break;
        case ResultId::mix_norm_lower:
        case ResultId::filamentation_lower:
            v.gates = mix_norm_lower_gates(p);
            break;
    }
    v.all_pass = true;
    for (const auto& g : v.gates) {
        if (!g.pass) {
            v.all_pass = false;
            break;
        }
    }
    return v;
}

}  // namespace mixbound
