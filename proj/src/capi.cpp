#include "cuspcollide.h"

#include "cuspcollide/collision.hpp"
#include "cuspcollide/config.hpp"
#include "cuspcollide/geometry.hpp"
#include "cuspcollide/quadrature.hpp"
#include "cuspcollide/regions.hpp"
#include "cuspcollide/stress.hpp"
#include "cuspcollide/testfield.hpp"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

using namespace cuspcollide;

namespace {

thread_local std::string g_last_error;

void copy_name(char* dst, const std::string& src) {
    std::strncpy(dst, src.c_str(), CC_NAME_LEN - 1);
    dst[CC_NAME_LEN - 1] = '\0';
}

// Every entry point funnels through here so exceptions never cross the
// C boundary.
template <typename Fn> cc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const QuadratureFailure& e) {
        g_last_error = e.what();
        return CC_ERROR_TOLERANCE;
    } catch (const BracketError& e) {
        g_last_error = e.what();
        return CC_ERROR_BRACKET;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CC_ERROR_ARGUMENT;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return CC_ERROR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CC_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CC_ERROR_INTERNAL;
    }
}

cc_status require(bool ok, const char* message) {
    if (ok)
        return CC_OK;
    g_last_error = message;
    return CC_ERROR_ARGUMENT;
}

FieldComponent to_component(int component) {
    switch (component) {
    case CC_COMPONENT_VALUE: return FieldComponent::Value;
    case CC_COMPONENT_GRADIENT: return FieldComponent::Gradient;
    case CC_COMPONENT_DH: return FieldComponent::Dh;
    default: throw std::invalid_argument("unknown field component");
    }
}

int winner_code(Winner w) {
    switch (w) {
    case Winner::Diffusive: return CC_WINNER_DIFFUSIVE;
    case Winner::Convective: return CC_WINNER_CONVECTIVE;
    case Winner::Tie: return CC_WINNER_TIE;
    }
    return CC_WINNER_TIE;
}

void fill_verdict(const RegionVerdict& v, cc_region_verdict* out) {
    out->admissible = v.admissible ? 1 : 0;
    out->boundary = v.boundary ? 1 : 0;
    out->alpha_bound = v.alpha_bound;
    copy_name(out->binding, v.binding);
    out->n_constraints = 0;
    for (const ConstraintItem& item : v.constraints) {
        if (out->n_constraints >= CC_MAX_CONSTRAINTS)
            break;
        cc_constraint& slot = out->constraints[out->n_constraints++];
        copy_name(slot.name, item.name);
        slot.value = item.value;
        slot.satisfied = item.satisfied ? 1 : 0;
    }
}

} // namespace

struct cc_field {
    TestField impl;
};

struct cc_region_table {
    std::vector<SweepRow> rows;
};

struct cc_trajectory {
    FallTrajectory impl;
};

extern "C" {

const char* cc_status_str(cc_status status) {
    switch (status) {
    case CC_OK: return "ok";
    case CC_ERROR_ARGUMENT: return "invalid argument";
    case CC_ERROR_TOLERANCE: return "tolerance not reached";
    case CC_ERROR_BRACKET: return "bracket exhausted";
    case CC_ERROR_IO: return "i/o or parse failure";
    case CC_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

const char* cc_version(void) { return "1.0.0"; }

cc_status cc_profile_load(const char* path, double* alpha, double* h, double* r0, double* d0) {
    if (const cc_status st = require(path && alpha && h && r0 && d0, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        SolidProfile base{*alpha, *h, *r0, *d0};
        const SolidProfile loaded = profile_from_file(path, base);
        *alpha = loaded.alpha;
        *h = loaded.h;
        *r0 = loaded.r0;
        *d0 = loaded.d0;
        return CC_OK;
    });
}

int cc_profile_consistent(double alpha, double h, double r0, double d0) {
    return SolidProfile{alpha, h, r0, d0}.cutoff_consistent() ? 1 : 0;
}

int cc_in_cusp(double alpha, double h, double r0, double d0, double r, double x3) {
    try {
        return CuspRegion{SolidProfile{alpha, h, r0, d0}}.contains(r, x3) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

cc_status cc_field_create(double alpha, double h, double r0, double d0, int mode,
                          cc_field** out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        if (mode != CC_MODE_CUSP && mode != CC_MODE_EXTENDED)
            throw std::invalid_argument("unknown field mode");
        const FieldMode fm = mode == CC_MODE_CUSP ? FieldMode::CuspOnly : FieldMode::Extended;
        *out = new cc_field{TestField(SolidProfile{alpha, h, r0, d0}, fm)};
        return CC_OK;
    });
}

void cc_field_destroy(cc_field* field) { delete field; }

cc_status cc_field_gap(const cc_field* field, double r, double* psi) {
    if (const cc_status st = require(field && psi, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *psi = gap(field->impl.profile(), r);
        return CC_OK;
    });
}

cc_status cc_field_eval(const cc_field* field, double r, double x3, cc_field_sample* out) {
    if (const cc_status st = require(field && out, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        out->stream = field->impl.stream(r, x3);
        const Velocity v = field->impl.velocity(r, x3);
        out->w_r = v.w_r;
        out->w_3 = v.w_3;
        const GradTensor g = field->impl.gradient(r, x3);
        out->frob_grad = g.frobenius();
        out->div = g.divergence();
        const Velocity dh = field->impl.dh_velocity(r, x3);
        out->dh_wr = dh.w_r;
        out->dh_w3 = dh.w_3;
        return CC_OK;
    });
}

cc_status cc_critical_exponents(double alpha, double* q_grad, double* q_val) {
    if (const cc_status st = require(q_grad && q_val, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        const CriticalExponents ce = critical_exponents(alpha);
        *q_grad = ce.q_grad;
        *q_val = ce.q_val;
        return CC_OK;
    });
}

cc_status cc_predicted_exponent(double alpha, double q, int component, double* sigma) {
    if (const cc_status st = require(sigma != nullptr, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *sigma = predicted_exponent_for(to_component(component), alpha, q);
        return CC_OK;
    });
}

cc_status cc_lq_norm(const cc_field* field, int component, double q, double rel_tol,
                     double* norm) {
    if (const cc_status st = require(field && norm, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *norm = lq_norm(field->impl, to_component(component), q,
                        cusp_region(field->impl.profile()), rel_tol);
        return CC_OK;
    });
}

cc_status cc_lemma_sweep(double alpha, double q, int component, const double* h_values, int n,
                         double rel_tol, double* norms_out, double* h_sorted_out,
                         cc_scaling_fit* fit) {
    if (const cc_status st = require(h_values && norms_out && h_sorted_out && fit && n >= 2,
                                     "need arrays and at least two h values");
        st != CC_OK)
        return st;
    return guarded([&] {
        const ScalingFit sf =
            h_sweep(alpha, q, std::vector<double>(h_values, h_values + n),
                    to_component(component), rel_tol);
        for (int i = 0; i < n; ++i) {
            h_sorted_out[i] = sf.h_values[static_cast<std::size_t>(i)];
            norms_out[i] = sf.norms[static_cast<std::size_t>(i)];
        }
        const LemmaVerdict verdict = lemma_verdict(sf);
        fit->slope = sf.slope;
        fit->fit_residual = sf.fit_residual;
        fit->q_critical = critical_exponent_for(sf.component, alpha);
        fit->predicted_exponent = verdict.predicted;
        fit->expected_bounded = verdict.expected_bounded ? 1 : 0;
        fit->pass = verdict.pass ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_region_full(double p, double gamma, double alpha, cc_region_verdict* out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        fill_verdict(admissible_full(ParameterPoint{p, gamma, alpha, {}}), out);
        return CC_OK;
    });
}

cc_status cc_region_noconv(double p, double gamma, double alpha, cc_region_verdict* out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        fill_verdict(admissible_noconv(ParameterPoint{p, gamma, alpha, {}}), out);
        return CC_OK;
    });
}

cc_status cc_region_heat(double gamma, double beta, double alpha, cc_region_verdict* out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        fill_verdict(admissible_heat(gamma, beta, alpha), out);
        return CC_OK;
    });
}

cc_status cc_auxiliary_thresholds(double p, double gamma, double alpha, cc_constraint* out,
                                  int capacity, int* count) {
    if (const cc_status st = require(out && count && capacity > 0, "need an output buffer");
        st != CC_OK)
        return st;
    return guarded([&] {
        const auto items = auxiliary_thresholds(ParameterPoint{p, gamma, alpha, {}});
        *count = 0;
        for (const ConstraintItem& item : items) {
            if (*count >= capacity)
                break;
            cc_constraint& slot = out[(*count)++];
            copy_name(slot.name, item.name);
            slot.value = item.value;
            slot.satisfied = item.satisfied ? 1 : 0;
        }
        return CC_OK;
    });
}

cc_status cc_winner_full(double p, double gamma, int* winner) {
    if (const cc_status st = require(winner != nullptr, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *winner = winner_code(winner_rule_full(p, gamma));
        return CC_OK;
    });
}

cc_status cc_winner_noconv(double p, double gamma, int* winner) {
    if (const cc_status st = require(winner != nullptr, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *winner = winner_code(winner_rule_noconv(p, gamma));
        return CC_OK;
    });
}

cc_status cc_equivalent_window(double p, double gamma, int* first, int* second) {
    if (const cc_status st = require(first && second, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        const WindowPair w = equivalent_window(p, gamma);
        *first = w.first ? 1 : 0;
        *second = w.second ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_starovoitov_blocked(double alpha, double q, int* blocked) {
    if (const cc_status st = require(blocked != nullptr, "null pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        *blocked = starovoitov_blocked(alpha, q) ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_region_sweep(int mode, double first_lo, double first_hi, double second_lo,
                          double second_hi, int resolution, cc_region_table** out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        RegionMode rm;
        switch (mode) {
        case CC_REGION_FULL: rm = RegionMode::Full; break;
        case CC_REGION_NOCONV: rm = RegionMode::NoConvection; break;
        case CC_REGION_HEAT: rm = RegionMode::Heat; break;
        default: throw std::invalid_argument("unknown region mode");
        }
        auto rows = region_sweep(rm, SweepRange{first_lo, first_hi},
                                 SweepRange{second_lo, second_hi}, resolution);
        *out = new cc_region_table{std::move(rows)};
        return CC_OK;
    });
}

int cc_region_table_size(const cc_region_table* table) {
    return table ? static_cast<int>(table->rows.size()) : 0;
}

cc_status cc_region_table_row(const cc_region_table* table, int index, double* first,
                              double* second, double* alpha_bound, char binding[CC_NAME_LEN]) {
    if (const cc_status st =
            require(table && first && second && alpha_bound && binding, "null pointer");
        st != CC_OK)
        return st;
    if (const cc_status st =
            require(index >= 0 && index < static_cast<int>(table->rows.size()),
                    "row index out of range");
        st != CC_OK)
        return st;
    const SweepRow& row = table->rows[static_cast<std::size_t>(index)];
    *first = row.p;
    *second = row.gamma;
    *alpha_bound = row.alpha_bound;
    copy_name(binding, row.binding);
    return CC_OK;
}

void cc_region_table_destroy(cc_region_table* table) { delete table; }

cc_status cc_stress_check(int model, double p, double delta0, int samples, uint64_t seed,
                          cc_stress_report* out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        StressModel fn;
        GrowthEnvelope envelope;
        switch (model) {
        case CC_STRESS_POWER_LAW:
            fn = make_power_law(p);
            envelope = GrowthEnvelope{p, 1.0, 1.0, 0.0}; // exact equality case
            break;
        case CC_STRESS_ACTIVATED_EULER:
            fn = make_activated_euler(delta0);
            envelope = GrowthEnvelope{2.0, 0.5, 1.0, 0.5 * delta0 * delta0};
            break;
        default:
            throw std::invalid_argument("unknown stress model");
        }
        const MonotoneReport mono = check_monotone(fn, samples, seed);
        const GrowthReport growth = check_growth(fn, envelope, samples, seed + 1);
        out->samples = samples;
        out->monotone_violations = mono.violations;
        out->monotone_min = mono.min_value;
        out->growth_checked = 1;
        out->growth_violations = growth.violations;
        out->growth_lower_margin = growth.worst_lower_margin;
        out->growth_upper_margin = growth.worst_upper_margin;
        out->envelope_p = envelope.p;
        out->envelope_c0 = envelope.c0;
        out->envelope_c1 = envelope.c1;
        out->envelope_delta = envelope.delta;
        out->pass = (mono.pass && growth.pass) ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_feasibility(double c0, double m, double fluid_energy, double v0, double j0,
                         double omega0, double gamma, double p, cc_feasibility_report* out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        CollisionBudget budget;
        budget.C0 = c0;
        budget.m = m;
        budget.fluid_energy = fluid_energy;
        budget.V0 = v0;
        budget.J0 = j0;
        budget.omega0 = omega0;
        budget.gamma = gamma;
        budget.p = p;
        const FeasibilityReport report = feasibility(budget);
        out->E0 = report.E0;
        out->K = report.K;
        out->collides = report.collides ? 1 : 0;
        out->time_bound = report.time_bound.value_or(0.0);
        return CC_OK;
    });
}

cc_status cc_min_mass(double c0, double fluid_energy, double v0_coeff, double omega0_coeff,
                      double j0, double gamma, double p, double* mass, double* e0,
                      double* k_at_mass, char branch[CC_NAME_LEN]) {
    if (const cc_status st = require(mass && e0 && k_at_mass && branch, "null pointer");
        st != CC_OK)
        return st;
    return guarded([&] {
        MinMassQuery query;
        query.C0 = c0;
        query.fluid_energy = fluid_energy;
        query.v0_coeff = v0_coeff;
        query.omega0_coeff = omega0_coeff;
        query.j0 = j0;
        query.gamma = gamma;
        query.p = p;
        const MinMassResult result = min_mass(query);
        *mass = result.mass;
        *e0 = result.E0;
        *k_at_mass = result.K_at_mass;
        copy_name(branch, result.branch);
        return CC_OK;
    });
}

cc_status cc_fall(double m, double g, double c, double sigma, double h0, int record_stride,
                  cc_trajectory** out) {
    if (const cc_status st = require(out != nullptr, "null output pointer"); st != CC_OK)
        return st;
    return guarded([&] {
        FallControl control;
        if (record_stride > 1)
            control.record_stride = static_cast<std::size_t>(record_stride);
        *out = new cc_trajectory{fall_demo(FallParams{m, g, c, sigma, h0}, control)};
        return CC_OK;
    });
}

long cc_trajectory_size(const cc_trajectory* trajectory) {
    return trajectory ? static_cast<long>(trajectory->impl.t.size()) : 0;
}

cc_status cc_trajectory_point(const cc_trajectory* trajectory, long index, double* t,
                              double* h) {
    if (const cc_status st = require(trajectory && t && h, "null pointer"); st != CC_OK)
        return st;
    if (const cc_status st =
            require(index >= 0 && index < static_cast<long>(trajectory->impl.t.size()),
                    "trajectory index out of range");
        st != CC_OK)
        return st;
    *t = trajectory->impl.t[static_cast<std::size_t>(index)];
    *h = trajectory->impl.h[static_cast<std::size_t>(index)];
    return CC_OK;
}

int cc_trajectory_touchdown(const cc_trajectory* trajectory, double* t) {
    if (!trajectory || !trajectory->impl.touchdown)
        return 0;
    if (t)
        *t = *trajectory->impl.touchdown;
    return 1;
}

void cc_trajectory_destroy(cc_trajectory* trajectory) { delete trajectory; }

} // extern "C"
