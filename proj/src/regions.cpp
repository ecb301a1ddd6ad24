#include "cuspcollide/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cuspcollide {

namespace {

double diffusive_fraction(double p) { return (3.0 - p) / (2.0 * p - 1.0); }

double convective_fraction(double p, double g) {
    return 3.0 * (4.0 * p * g - 3.0 * p - 6.0 * g) / (p * g + 3.0 * p + 6.0 * g);
}

double gap_rate_fraction(double p, double g) {
    return 9.0 * (p * g - p - g) / (2.0 * p * g + 3.0 * p + 3.0 * g);
}

bool near(double a, double b) { return std::abs(a - b) <= kTieTol * std::max({1.0, std::abs(a), std::abs(b)}); }

// strictly greater, and "greater or equal up to the tie tolerance"
struct Strict {
    bool ok;
    bool weak;
};
Strict strictly_above(double x, double threshold) {
    return {x > threshold, x > threshold || near(x, threshold)};
}
Strict strictly_below(double x, double threshold) {
    return {x < threshold, x < threshold || near(x, threshold)};
}

} // namespace

void ParameterPoint::validate() const {
    if (!(p > 1.0))
        throw std::invalid_argument("ParameterPoint: p must exceed 1");
    if (!(gamma > 1.5))
        throw std::invalid_argument("ParameterPoint: gamma must exceed 3/2");
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("ParameterPoint: alpha must lie in (0, 1]");
    if (beta && !(*beta > 1.0))
        throw std::invalid_argument("ParameterPoint: beta must exceed 1");
}

namespace {

RegionVerdict two_fraction_verdict(double alpha, double frac_a, const std::string& name_a,
                                   double frac_b, const std::string& name_b,
                                   std::vector<ConstraintItem> window_items,
                                   const std::vector<Strict>& window_checks) {
    RegionVerdict v;
    v.alpha_bound = std::min(frac_a, frac_b);
    v.constraints = std::move(window_items);
    v.constraints.push_back({name_a, frac_a, alpha < frac_a});
    v.constraints.push_back({name_b, frac_b, alpha < frac_b});

    bool window_ok = true;
    bool equality_blocked = false;
    std::string failed;
    for (std::size_t i = 0; i < window_checks.size(); ++i) {
        if (!window_checks[i].ok && window_ok) {
            window_ok = false;
            failed = v.constraints[i].name;
        }
        equality_blocked = equality_blocked || (!window_checks[i].ok && window_checks[i].weak);
    }

    const Strict alpha_ok = strictly_below(alpha, v.alpha_bound);
    equality_blocked = equality_blocked || (!alpha_ok.ok && alpha_ok.weak);
    v.admissible = window_ok && alpha_ok.ok;
    // inadmissible through at least one exact-equality case
    v.boundary = !v.admissible && equality_blocked;
    if (!window_ok) {
        v.binding = failed;
    } else if (near(frac_a, frac_b)) {
        v.binding = "tie";
    } else {
        v.binding = frac_a < frac_b ? name_a : name_b;
    }
    return v;
}

} // namespace

RegionVerdict admissible_full(const ParameterPoint& pt) {
    pt.validate();
    const double p = pt.p;
    const double g = pt.gamma;

    std::vector<ConstraintItem> items;
    std::vector<Strict> checks;

    const Strict g_min = strictly_above(g, 1.5);
    items.push_back({"gamma_min", 1.5, g_min.ok});
    checks.push_back(g_min);

    const Strict p_max = strictly_below(p, 3.0);
    items.push_back({"p_max", 3.0, p_max.ok});
    checks.push_back(p_max);

    // for gamma <= 3 the window requires p > 6g/(4g-3); for gamma > 3 it
    // relaxes to p >= 2 (equality allowed)
    Strict p_min;
    double p_lo;
    if (g <= 3.0) {
        p_lo = 6.0 * g / (4.0 * g - 3.0);
        p_min = strictly_above(p, p_lo);
    } else {
        p_lo = 2.0;
        p_min = Strict{p >= 2.0, p >= 2.0 || near(p, 2.0)};
    }
    items.push_back({"p_min", p_lo, p_min.ok});
    checks.push_back(p_min);

    return two_fraction_verdict(pt.alpha, diffusive_fraction(p), "diffusive",
                                convective_fraction(p, g), "convective", std::move(items),
                                checks);
}

RegionVerdict admissible_noconv(const ParameterPoint& pt) {
    pt.validate();
    const double p = pt.p;
    const double g = pt.gamma;

    std::vector<ConstraintItem> items;
    std::vector<Strict> checks;

    const Strict g_min = strictly_above(g, 1.5);
    items.push_back({"gamma_min", 1.5, g_min.ok});
    checks.push_back(g_min);

    const Strict p_max = strictly_below(p, 3.0);
    items.push_back({"p_max", 3.0, p_max.ok});
    checks.push_back(p_max);

    const double p_lo = g / (g - 1.0);
    const Strict p_min = strictly_above(p, p_lo);
    items.push_back({"p_min", p_lo, p_min.ok});
    checks.push_back(p_min);

    return two_fraction_verdict(pt.alpha, diffusive_fraction(p), "diffusive",
                                gap_rate_fraction(p, g), "convective", std::move(items), checks);
}

RegionVerdict admissible_heat(double gamma, double beta, double alpha) {
    if (!(gamma > 0.0) || !(beta > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("admissible_heat: inputs must be positive");

    std::vector<ConstraintItem> items;
    std::vector<Strict> checks;

    const Strict g_min = strictly_above(gamma, 3.0);
    items.push_back({"gamma_min", 3.0, g_min.ok});
    checks.push_back(g_min);

    const Strict b_min = strictly_above(beta, 2.0);
    items.push_back({"beta_min", 2.0, b_min.ok});
    checks.push_back(b_min);

    const double conv = 3.0 * (gamma - 3.0) / (4.0 * gamma + 3.0);
    const double cond = 3.0 * (beta - 2.0) / (9.0 * beta + 2.0);
    return two_fraction_verdict(alpha, conv, "convective", cond, "conductive", std::move(items),
                                checks);
}

std::vector<ConstraintItem> auxiliary_thresholds(const ParameterPoint& pt) {
    pt.validate();
    const double p = pt.p;
    const double g = pt.gamma;
    const double a = pt.alpha;
    std::vector<ConstraintItem> items;
    items.push_back({"diffusive_alpha", diffusive_fraction(p), a < diffusive_fraction(p)});
    items.push_back({"convective_alpha", convective_fraction(p, g), a < convective_fraction(p, g)});
    items.push_back({"gap_rate_alpha", gap_rate_fraction(p, g), a < gap_rate_fraction(p, g)});
    items.push_back({"momentum_flux_alpha", (3.0 * g - 3.0) / (g + 1.0),
                     a < (3.0 * g - 3.0) / (g + 1.0)});
    items.push_back({"buoyancy_alpha", 3.0 - 3.0 / g, a < 3.0 - 3.0 / g});
    items.push_back({"stress_p_max", 3.0, p < 3.0});
    items.push_back({"convective_p_min", 2.0, p >= 2.0});
    return items;
}

namespace {

Winner winner_from(double lhs, double rhs) {
    if (std::abs(lhs - rhs) <= kTieTol * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
        return Winner::Tie;
    return lhs > rhs ? Winner::Diffusive : Winner::Convective;
}

} // namespace

Winner winner_rule_full(double p, double gamma) {
    // diffusive <= convective  <=>  gamma (5p - 9) >= 3p
    return winner_from(gamma * (5.0 * p - 9.0), 3.0 * p);
}

Winner winner_rule_noconv(double p, double gamma) {
    return winner_from(gamma * (4.0 * p - 6.0), 3.0 * p);
}

WindowPair equivalent_window(double p, double gamma) {
    if (!(p > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("equivalent_window: p and gamma must be positive");
    WindowPair w;
    w.first = gamma > 1.5 && gamma <= 3.0 && p < 3.0 && p > 6.0 * gamma / (4.0 * gamma - 3.0);
    w.second = p > 2.0 && p < 3.0 && gamma <= 3.0 && gamma > 3.0 * p / (4.0 * p - 6.0);
    return w;
}

bool starovoitov_blocked(double alpha, double q) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("starovoitov_blocked: alpha must be positive");
    if (!(q >= 1.0))
        throw std::invalid_argument("starovoitov_blocked: q must be >= 1");
    return alpha * (q - 1.0) >= 3.0;
}

std::vector<SweepRow> region_sweep(RegionMode mode, SweepRange first, SweepRange second,
                                   int resolution) {
    if (resolution < 1)
        throw std::invalid_argument("region_sweep: resolution must be >= 1");
    if (first.hi < first.lo || second.hi < second.lo)
        throw std::invalid_argument("region_sweep: ranges must have lo <= hi");

    auto grid = [resolution](const SweepRange& range) {
        std::vector<double> values;
        if (resolution == 1) {
            values.push_back(range.lo);
            return values;
        }
        for (int i = 0; i < resolution; ++i)
            values.push_back(range.lo +
                             (range.hi - range.lo) * static_cast<double>(i) / (resolution - 1));
        return values;
    };

    std::vector<SweepRow> rows;
    for (double a : grid(first)) {
        for (double b : grid(second)) {
            SweepRow row;
            row.p = a;
            row.gamma = b;
            if (mode == RegionMode::Heat) {
                const RegionVerdict v = admissible_heat(a, b, 0.5);
                row.alpha_bound = v.alpha_bound;
                row.binding = v.binding;
            } else {
                ParameterPoint pt;
                pt.p = a;
                pt.gamma = b;
                pt.alpha = 0.5;
                const RegionVerdict v =
                    mode == RegionMode::Full ? admissible_full(pt) : admissible_noconv(pt);
                row.alpha_bound = v.alpha_bound;
                row.binding = v.binding;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace cuspcollide
