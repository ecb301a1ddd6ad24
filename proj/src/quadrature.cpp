#include "cuspcollide/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

namespace cuspcollide {

namespace {

struct GaussRule {
    std::vector<double> nodes;   // on (0, 1)
    std::vector<double> weights; // sum to 1
};

// Golub-Welsch is overkill for fixed small orders; tabulated (-1,1) rules.
GaussRule make_rule(int order) {
    static const double n5[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                0.5384693101056831, 0.9061798459386640};
    static const double w5[] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                0.4786286704993665, 0.2369268850561891};
    static const double n7[] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                                0.0,                 0.4058451513773972,  0.7415311855993945,
                                0.9491079123427585};
    static const double w7[] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                                0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
                                0.1294849661688697};
    const double* n = nullptr;
    const double* w = nullptr;
    switch (order) {
    case 5: n = n5; w = w5; break;
    case 7: n = n7; w = w7; break;
    default: throw std::invalid_argument("make_rule: only orders 5 and 7 are tabulated");
    }
    GaussRule rule;
    for (int i = 0; i < order; ++i) {
        rule.nodes.push_back(0.5 * (n[i] + 1.0));
        rule.weights.push_back(0.5 * w[i]);
    }
    return rule;
}

struct Cell {
    double ra, rb; // radial extent
    double sa, sb; // relative height extent, x3 = s * psi(r)
    double value = 0.0;
    double error = 0.0;
    int depth = 0;
};

struct CellCompare {
    bool operator()(const Cell& a, const Cell& b) const { return a.error < b.error; }
};

} // namespace

QuadratureResult integrate_cusp(const std::function<double(double, double)>& f,
                                const CuspRegion& region, double tol,
                                const QuadratureControl& control) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_cusp: tolerance must be positive");
    region.profile.validate();
    const SolidProfile& prof = region.profile;

    const GaussRule base = make_rule(control.base_order);
    const GaussRule embed = make_rule(control.embedded_order);

    // integrand over a (r, s) cell, jacobian 2*pi*r*psi(r)
    auto cell_integral = [&](const Cell& c, const GaussRule& rule) {
        const double dr = c.rb - c.ra;
        const double ds = c.sb - c.sa;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = c.ra + dr * rule.nodes[i];
            const double psi = gap(prof, r);
            const double jac = 2.0 * std::numbers::pi * r * psi * dr * ds;
            double inner = 0.0;
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const double s = c.sa + ds * rule.nodes[j];
                inner += rule.weights[j] * f(r, s * psi);
            }
            acc += rule.weights[i] * jac * inner;
        }
        return acc;
    };

    auto evaluate = [&](Cell& c) {
        c.value = cell_integral(c, base);
        c.error = std::abs(c.value - cell_integral(c, embed));
    };

    // initial mesh: geometric grading in r with ratio 1/2 down to the cusp
    // length scale (below it psi is h-dominated and the integrand flattens)
    const double r_scale = std::pow(prof.h, 1.0 / (1.0 + prof.alpha));
    std::vector<double> edges{prof.r0};
    while (edges.back() > r_scale / 4.0 && edges.size() < 60)
        edges.push_back(edges.back() * 0.5);
    edges.push_back(0.0);
    std::reverse(edges.begin(), edges.end());

    std::priority_queue<Cell, std::vector<Cell>, CellCompare> queue;
    double total = 0.0;
    double total_error = 0.0;
    int cells = 0;
    int max_depth = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Cell c{edges[i], edges[i + 1], 0.0, 1.0};
        evaluate(c);
        total += c.value;
        total_error += c.error;
        ++cells;
        queue.push(c);
    }

    while (total_error > tol && cells + 3 <= control.max_cells) {
        Cell worst = queue.top();
        if (worst.depth >= control.max_depth)
            break;
        queue.pop();
        total -= worst.value;
        total_error -= worst.error;
        --cells;

        const double rm = 0.5 * (worst.ra + worst.rb);
        const double sm = 0.5 * (worst.sa + worst.sb);
        const Cell children[4] = {
            {worst.ra, rm, worst.sa, sm, 0, 0, worst.depth + 1},
            {rm, worst.rb, worst.sa, sm, 0, 0, worst.depth + 1},
            {worst.ra, rm, sm, worst.sb, 0, 0, worst.depth + 1},
            {rm, worst.rb, sm, worst.sb, 0, 0, worst.depth + 1},
        };
        for (Cell child : children) {
            evaluate(child);
            total += child.value;
            total_error += child.error;
            ++cells;
            max_depth = std::max(max_depth, child.depth);
            queue.push(child);
        }
    }

    QuadratureResult result;
    result.value = total;
    result.abs_error_estimate = total_error;
    result.cells = cells;
    result.max_depth = max_depth;
    result.converged = total_error <= tol;
    return result;
}

double lq_norm_of(const std::function<double(double, double)>& magnitude, double q,
                  const CuspRegion& region, double rel_tol, const QuadratureControl& control) {
    if (!(q >= 1.0))
        throw std::invalid_argument("lq_norm: exponent q must be >= 1");
    auto integrand = [&](double r, double x3) { return std::pow(std::abs(magnitude(r, x3)), q); };

    // pilot pass on the graded base mesh fixes the absolute-tolerance scale
    QuadratureControl pilot_control = control;
    pilot_control.max_cells = 0;
    const QuadratureResult pilot =
        integrate_cusp(integrand, region, std::numeric_limits<double>::max(), pilot_control);
    const double scale = std::max(std::abs(pilot.value), 1e-300);

    const QuadratureResult result = integrate_cusp(integrand, region, rel_tol * scale, control);
    if (!result.converged) {
        std::ostringstream msg;
        msg << "lq_norm: quadrature did not converge (value " << result.value << ", error "
            << result.abs_error_estimate << ", " << result.cells << " cells)";
        throw QuadratureFailure(msg.str(), result);
    }
    return std::pow(result.value, 1.0 / q);
}

double lq_norm(const TestField& field, FieldComponent component, double q,
               const CuspRegion& region, double rel_tol, const QuadratureControl& control) {
    std::function<double(double, double)> magnitude;
    switch (component) {
    case FieldComponent::Value:
        magnitude = [&field](double r, double x3) {
            const Velocity v = field.velocity(r, x3);
            return std::hypot(v.w_r, v.w_3);
        };
        break;
    case FieldComponent::Gradient:
        magnitude = [&field](double r, double x3) { return field.gradient(r, x3).frobenius(); };
        break;
    case FieldComponent::Dh:
        magnitude = [&field](double r, double x3) {
            const Velocity v = field.dh_velocity(r, x3);
            return std::hypot(v.w_r, v.w_3);
        };
        break;
    }
    return lq_norm_of(magnitude, q, region, rel_tol, control);
}

CriticalExponents critical_exponents(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("critical_exponents: alpha must lie in (0, 1]");
    return CriticalExponents{(3.0 + alpha) / (1.0 + 2.0 * alpha), 1.0 + 3.0 / alpha};
}

double predicted_exponent(double alpha, double q) {
    if (!(q >= 1.0))
        throw std::invalid_argument("predicted_exponent: q must be >= 1");
    const double qc = (3.0 + alpha) / (1.0 + 2.0 * alpha);
    if (q <= qc)
        return 0.0;
    return (q * (1.0 + 2.0 * alpha) - (3.0 + alpha)) / (q * (1.0 + alpha));
}

double predicted_value_exponent(double alpha, double q) {
    if (!(q >= 1.0))
        throw std::invalid_argument("predicted_value_exponent: q must be >= 1");
    const double qv = 1.0 + 3.0 / alpha;
    if (q <= qv)
        return 0.0;
    return (alpha * q - (3.0 + alpha)) / (q * (1.0 + alpha));
}

double predicted_exponent_for(FieldComponent component, double alpha, double q) {
    return component == FieldComponent::Value ? predicted_value_exponent(alpha, q)
                                              : predicted_exponent(alpha, q);
}

double critical_exponent_for(FieldComponent component, double alpha) {
    const CriticalExponents ce = critical_exponents(alpha);
    return component == FieldComponent::Value ? ce.q_val : ce.q_grad;
}

ScalingFit h_sweep(double alpha, double q, std::vector<double> h_values, FieldComponent component,
                   double rel_tol) {
    if (h_values.size() < 2)
        throw std::invalid_argument("h_sweep: need at least two h values");
    std::sort(h_values.begin(), h_values.end(), std::greater<>());
    if (h_values.front() == h_values.back())
        throw std::invalid_argument("h_sweep: h values must not all coincide");

    std::vector<std::future<double>> jobs;
    jobs.reserve(h_values.size());
    for (double h : h_values) {
        jobs.push_back(std::async(std::launch::async, [=]() {
            SolidProfile prof;
            prof.alpha = alpha;
            prof.h = h;
            const TestField field(prof, FieldMode::CuspOnly);
            return lq_norm(field, component, q, cusp_region(prof), rel_tol);
        }));
    }

    ScalingFit fit;
    fit.q = q;
    fit.alpha = alpha;
    fit.component = component;
    fit.h_values = h_values;
    for (auto& job : jobs)
        fit.norms.push_back(job.get());

    const std::size_t n = h_values.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(h_values[i]);
        const double y = std::log(fit.norms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid =
            std::log(fit.norms[i]) - (fit.slope * std::log(h_values[i]) + intercept);
        ss += resid * resid;
    }
    fit.fit_residual = std::sqrt(ss / static_cast<double>(n));
    return fit;
}

LemmaVerdict lemma_verdict(const ScalingFit& fit) {
    LemmaVerdict v;
    const double qc = critical_exponent_for(fit.component, fit.alpha);
    v.predicted = predicted_exponent_for(fit.component, fit.alpha, fit.q);
    v.expected_bounded = fit.q < qc;
    std::ostringstream desc;
    if (v.expected_bounded) {
        v.pass = std::abs(fit.slope) < kBoundedSlopeTol;
        desc << "bounded regime (q < " << qc << "): |slope| = " << std::abs(fit.slope)
             << (v.pass ? " < " : " >= ") << kBoundedSlopeTol;
    } else {
        const double lo = -v.predicted * (1.0 + kBlowupSlopeRelTol);
        const double hi = -v.predicted * (1.0 - kBlowupSlopeRelTol);
        v.pass = fit.slope >= lo && fit.slope <= hi;
        desc << "blow-up regime: slope " << fit.slope << (v.pass ? " inside " : " outside ")
             << "[" << lo << ", " << hi << "]";
    }
    v.description = desc.str();
    return v;
}

} // namespace cuspcollide
