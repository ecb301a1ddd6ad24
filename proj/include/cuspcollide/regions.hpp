#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cuspcollide {

// Exponent tuple of the admissibility analysis: power-law exponent p,
// adiabatic exponent gamma, surface regularity alpha, and (heat-conducting
// variant) conductivity growth exponent beta.
struct ParameterPoint {
    double p = 2.0;
    double gamma = 3.0;
    double alpha = 0.5;
    std::optional<double> beta;

    void validate() const;
};

struct ConstraintItem {
    std::string name;
    double value = 0.0;  // threshold or window bound being compared against
    bool satisfied = false;
};

struct RegionVerdict {
    bool admissible = false;
    bool boundary = false;     // an equality case blocked admissibility
    double alpha_bound = 0.0;  // min of the competing alpha thresholds
    std::string binding;       // which constraint decides the verdict
    std::vector<ConstraintItem> constraints;
};

// ties between competing fractions are resolved to this tolerance
inline constexpr double kTieTol = 1e-12;

// alpha < min{ (3-p)/(2p-1), 3(4 p g - 3p - 6g)/(p g + 3p + 6g) } inside the
// window { 3/2 < g <= 3, 6g/(4g-3) < p < 3 } or { g > 3, 2 <= p < 3 }.
RegionVerdict admissible_full(const ParameterPoint& pt);

// convection dropped: g > 3/2, g/(g-1) < p < 3,
// alpha < min{ (3-p)/(2p-1), 9(p g - p - g)/(2 p g + 3p + 3g) }.
RegionVerdict admissible_noconv(const ParameterPoint& pt);

// temperature-growing viscosity: g > 3, b > 2,
// alpha < min{ 3(g-3)/(4g+3), 3(b-2)/(9b+2) }.
RegionVerdict admissible_heat(double gamma, double beta, double alpha);

// The per-term thresholds feeding the minimum, itemized for display.
std::vector<ConstraintItem> auxiliary_thresholds(const ParameterPoint& pt);

enum class Winner { Diffusive, Convective, Tie };

// Closed-form rule for which fraction achieves the minimum: diffusive wins
// iff gamma (5p - 9) >= 3p (full model) / gamma (4p - 6) >= 3p (no
// convection); sign-safe restatement of gamma >= 3p/(5p-9) etc.
Winner winner_rule_full(double p, double gamma);
Winner winner_rule_noconv(double p, double gamma);

// The two equivalent statements of the first admissibility window:
// { 3/2 < g <= 3 and 6g/(4g-3) < p < 3 }  vs  { 2 < p < 3 and 3p/(4p-6) < g <= 3 }.
struct WindowPair {
    bool first = false;
    bool second = false;
};
WindowPair equivalent_window(double p, double gamma);

// Regularity regime in which contact is impossible: alpha (q - 1) >= 3.
bool starovoitov_blocked(double alpha, double q);

enum class RegionMode { Full, NoConvection, Heat };

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct SweepRow {
    double p = 0.0;     // gamma in heat mode
    double gamma = 0.0; // beta in heat mode
    double alpha_bound = 0.0;
    std::string binding;
};

// Grid evaluation of the selected admissibility map; rows sorted by the two
// swept parameters. In heat mode the ranges are (gamma, beta).
std::vector<SweepRow> region_sweep(RegionMode mode, SweepRange first, SweepRange second,
                                   int resolution);

} // namespace cuspcollide
