#pragma once

#include <string>
#include <vector>

#include "mixbound/rational.hpp"

namespace mixbound {

/// Parameters every bound curve is built from.
struct BoundParams {
    int dim = 2;           ///< spatial dimension, 2 or 3
    double r_star = 0.0;   ///< decay character of the initial data
    double kappa = 0.0;    ///< diffusivity
    double alpha = 0.0;    ///< decay exponent of ||u(t)||_2
    Rational nu{1, 1};     ///< decay exponent of ||grad u(t)||_inf (exact rational)
    Rational m{4, 1};      ///< free rational parameter of the validity condition
    double C = 1.0;        ///< free multiplicative constant (fitted by the harness)

    /// Derived exponent n = max{d/4 + r*/2, m} entering the gradient bound.
    double n() const;
};

enum class BoundDirection { lower, upper };

enum class BoundQuantity { theta_l2, T_l2, eta_l2, grad_l2, invgrad_l2, lambda };

/// One validity-gate evaluation: pass/fail plus the numeric margin
/// (positive = satisfied by that much, negative = violated by that much).
struct GateCheck {
    std::string name;
    bool pass = false;
    double margin = 0.0;
};

/// An evaluable one-sided bound C (1+t)^{t_exponent} e^{g_coefficient G(t; nu)}.
///
/// The curve's kappa power is recorded for reports but never folded into the
/// evaluation: the free constant C absorbs all prefactors, so verification is
/// exponent- and shape-based only.
struct BoundCurve {
    std::string name;            ///< stable role name, e.g. "energy_upper"
    BoundDirection direction = BoundDirection::upper;
    BoundQuantity quantity = BoundQuantity::theta_l2;
    std::string regime;          ///< which formula branch applies, e.g. "nu>1"
    std::string note;            ///< caveats (recorded discrepancies etc.)
    double C = 1.0;              ///< multiplicative free constant
    double kappa = 1.0;          ///< diffusivity the curve was built for
    double kappa_power = 0.0;    ///< recorded kappa exponent (informational)
    double t_exponent = 0.0;     ///< polynomial exponent in (1+t)
    double g_coefficient = 0.0;  ///< coefficient of G(t; nu) in the exponential
    double nu = 0.0;             ///< envelope exponent used when evaluating G
    double t_min = 0.0;          ///< bound asserted only for t >= t_min
    std::vector<GateCheck> gates;

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }
    bool applicable() const;  ///< every gate passes
    std::vector<std::string> violated_gates() const;
    BoundCurve with_constant(double new_C) const;
};

/// G(t; nu) = int_0^t (1+s)^{-nu} ds: ((1+t)^{1-nu} - 1)/(1-nu) for nu != 1,
/// log(1+t) for nu == 1.  Increasing, G(0) = 0; bounded by 1/(nu-1) iff nu > 1.
double accumulated_decay(double t, double nu);

/// Heat-flow floor: ||T(t)||_2 >= C (kappa (1+t))^{-d/4 - r*/2}.
BoundCurve heat_lower_curve(const BoundParams& p);

/// Advected-scalar ceiling:
/// ||theta||_2 <= C kappa^{-n} (1+t)^{-min{d/4 + r*/2, d/4 + 1/2}},
/// gated on alpha > 1/2 - d/4.
BoundCurve theta_upper_curve(const BoundParams& p);

/// Advected-scalar floor (requires r* < 1, throws otherwise):
/// ||theta||_2 >= C kappa^{-d/4-r*/2} (1+t)^{-d/4-r*/2} for t >= t_min.
BoundCurve theta_lower_curve(const BoundParams& p);

/// The "t sufficiently large" requirement for the scalar floor:
/// (1+t)^e <= K with K = kappa^{m + 1/2 - d/4 - r*}, where the branch (and
/// its exponent e) is selected by alpha.  t_min = max(K^{1/e} - 1, 0).
struct ValidityThreshold {
    char branch = 'A';   ///< 'A' when alpha >= 3/2 - r*/2, else 'B'
    double exponent = 0; ///< the active (negative) exponent e
    double t_min = 0.0;
};
ValidityThreshold validity_time_threshold(const BoundParams& p);

/// Remainder ceiling (for the advective correction eta = theta - T):
/// ||eta||_2 <= C kappa^{-(m + d/4 + 1/2)/2} (1+t)^{-E/2} with
/// E = min{d/2 + 1, d/2 + r*/2 + alpha - 1/2} for r* <= 1 and
/// E = min{d/2 + 1, d/2 + alpha} for r* >= 1; gated on
/// alpha > max{1/2 - d/4, 1 - d/4 - r*/2} and m >= d/2 + 1.
BoundCurve eta_upper_curve(const BoundParams& p);

/// Gradient ceiling ||grad theta||_2 <= C kappa^{-n-1/2} (1+t)^{-P} e^{+G}:
/// P = min{d/4 + r*/2 + 1/2, d/4 + 1} for nu >= 1 (no exponential at nu = 1),
/// P = min{d/4 + r*/2 + 3/2, d/4 + 2} for 0 <= nu < 1 (unbounded e^{+G}).
BoundCurve grad_upper_curve(const BoundParams& p);

/// Mix-norm floor ||grad^{-1} theta||_2 >= C e^{-G} (1+t)^{-d/4-r*/2+Q} with
/// Q = 1/2 for nu >= 1 (no exponential at nu = 1) and Q = 3/2 for nu < 1.
/// Requires r* in (1 - d/2, 1) (finite mix-norm of the data); throws outside.
/// The kappa power is recorded only (its sign differs between the source's
/// statement and proof) and never enters verdicts.
BoundCurve hm1_lower_curve(const BoundParams& p);

/// Filamentation floor for advection-diffusion:
/// lambda >= C kappa^q e^{-G} (1+t)^{1/2} (nu > 1), C kappa^q (1+t)^{1/2}
/// (nu = 1), C kappa^q e^{-G} (1+t)^{3/2} (nu < 1), q = m + 1/2 - d/4 - r*/2.
/// Same admissibility as the mix-norm floor.
BoundCurve lambda_lower_curve(const BoundParams& p);

/// Filamentation floor with kappa = 0: lambda >= C0 e^{-G} for nu != 1 and
/// lambda >= C0 (1+t)^{-1} for nu = 1, where C0 = lambda(0).
BoundCurve pure_advection_lambda_curve(const Rational& nu, double C0);

/// Filamentation floor with u = 0: lambda >= C (1+t)^{1/2}.
BoundCurve pure_diffusion_lambda_curve(double C);

enum class EquationKind { pure_advection, advection_diffusion, pure_diffusion };

enum class AsymptoticKind { zero, finite, infinity };

struct AsymptoticClass {
    AsymptoticKind kind = AsymptoticKind::finite;
    double value = 0.0;  ///< the limit, meaningful only when kind == finite
};

/// Long-time class of the filamentation floor per equation and envelope rate;
/// the only finite entry is pure advection with nu > 1, value e^{-1/(nu-1)}.
AsymptoticClass asymptotic_class(EquationKind equation, const Rational& nu);

/// Numerical classification of a curve's long-time limit, evaluated at
/// t_eval: below 1e-6 -> zero, above 1e+6 -> infinity; values in between are
/// disambiguated by the trend over the preceding two decades (ratio > 2 still
/// growing -> infinity, < 1/2 still decaying -> zero, else finite).
AsymptoticClass classify_curve_limit(const BoundCurve& curve, double t_eval = 1e8);

/// The six one-sided results whose hypotheses can be gate-checked.
enum class ResultId {
    energy_lower,         ///< scalar L2 floor
    energy_upper,         ///< scalar L2 ceiling
    remainder_upper,      ///< advective-correction ceiling
    gradient_upper,       ///< gradient ceiling
    mix_norm_lower,       ///< grad^{-1} floor
    filamentation_lower,  ///< lambda floor
};

std::string result_id_name(ResultId id);

struct AssumptionVerdict {
    ResultId id = ResultId::energy_lower;
    bool all_pass = false;
    std::vector<GateCheck> gates;
};

/// Evaluate every hypothesis gate of the given result on p; never throws.
AssumptionVerdict assumption_check(const BoundParams& p, ResultId id);

}  // namespace mixbound
