#pragma once

#include "cuspcollide/geometry.hpp"
#include "cuspcollide/testfield.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspcollide {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int cells = 0;
    int max_depth = 0;
    bool converged = false;
};

struct QuadratureControl {
    int base_order = 7;        // tensor Gauss-Legendre order per cell
    int embedded_order = 5;    // lower-order rule for the error estimate
    int max_cells = 200000;
    int max_depth = 28;
};

// Thrown when the cell budget runs out before the tolerance is met; carries
// the best estimate so callers can still inspect it.
class QuadratureFailure : public std::runtime_error {
  public:
    QuadratureFailure(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadratureResult best_estimate;
};

// integral of f(r, x3) * 2*pi*r over {0 < r < r0, 0 < x3 < psi(r)} to
// absolute tolerance tol. Cells live in (r, s) with x3 = s*psi(r); the
// initial mesh is graded geometrically in r (ratio 1/2) down to the cusp
// length scale h^(1/(1+alpha)), then cells with the worst embedded-rule
// error estimate are quartered until the summed estimate drops below tol.
QuadratureResult integrate_cusp(const std::function<double(double, double)>& f,
                                const CuspRegion& region, double tol,
                                const QuadratureControl& control = {});

enum class FieldComponent { Value, Gradient, Dh };

// ( integral |selected|^q dV )^(1/q), dV = 2*pi*r dr dx3, over the gap.
// rel_tol controls the integral of |.|^q relative to its own magnitude.
// Throws QuadratureFailure when the integral does not converge.
double lq_norm(const TestField& field, FieldComponent component, double q,
               const CuspRegion& region, double rel_tol = 1e-8,
               const QuadratureControl& control = {});

// Generic variant for arbitrary nonnegative integrands |f(r, x3)|.
double lq_norm_of(const std::function<double(double, double)>& magnitude, double q,
                  const CuspRegion& region, double rel_tol = 1e-8,
                  const QuadratureControl& control = {});

struct CriticalExponents {
    double q_grad; // (3+alpha)/(1+2 alpha): gradient and dh norms bounded below this
    double q_val;  // 1 + 3/alpha: value norm bounded below this
};

CriticalExponents critical_exponents(double alpha);

// Blow-up rate sigma of the gradient (and dh) norm, norm ~ h^(-sigma):
// 0 for q <= (3+alpha)/(1+2 alpha), else (q(1+2 alpha) - (3+alpha)) / (q(1+alpha)).
// Obtained by rescaling r = h^(1/(1+alpha)) s in the gap integral.
double predicted_exponent(double alpha, double q);

// Same rescaling applied to the value norm: 0 for q <= 1 + 3/alpha, else
// (alpha q - (3+alpha)) / (q(1+alpha)).
double predicted_value_exponent(double alpha, double q);

double predicted_exponent_for(FieldComponent component, double alpha, double q);
double critical_exponent_for(FieldComponent component, double alpha);

struct ScalingFit {
    double q = 0.0;
    double alpha = 0.0;
    FieldComponent component = FieldComponent::Gradient;
    std::vector<double> h_values; // strictly decreasing
    std::vector<double> norms;    // strictly positive
    double slope = 0.0;           // least-squares slope of log(norm) vs log(h)
    double fit_residual = 0.0;    // rms residual of the fit
};

// Norm per h on a fresh default-geometry profile, plus the log-log fit.
// Independent h evaluations run concurrently; results are keyed by h.
ScalingFit h_sweep(double alpha, double q, std::vector<double> h_values,
                   FieldComponent component, double rel_tol = 1e-7);

// Tolerances of the scaling dichotomy check.
inline constexpr double kBoundedSlopeTol = 0.03; // |slope| below this when q < q_c
inline constexpr double kBlowupSlopeRelTol = 0.10; // relative band around -sigma otherwise

struct LemmaVerdict {
    bool expected_bounded = false;
    double predicted = 0.0; // blow-up rate sigma (0 when bounded)
    bool pass = false;
    std::string description;
};

LemmaVerdict lemma_verdict(const ScalingFit& fit);

} // namespace cuspcollide
