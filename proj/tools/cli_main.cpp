// cuspcollide command-line front end. Talks to the shared library strictly
// through the C API in cuspcollide.h. Each subcommand parses its own
// argument list; exit codes: 0 success, 1 run/verification failure,
// 2 usage error.

#include "CLI11.hpp"
#include "cuspcollide.h"
#include "emit.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

// CLI11's stock macro exits 1 on bad flags; the dispatch contract wants 2
#define CUSP_PARSE(app, argc, argv)                                                              \
    try {                                                                                        \
        (app).parse((argc), (argv));                                                             \
    } catch (const CLI::CallForHelp& e) {                                                        \
        return (app).exit(e);                                                                    \
    } catch (const CLI::ParseError& e) {                                                         \
        std::cerr << e.what() << "\nrun with --help for usage\n";                              \
        return 2;                                                                                \
    }

namespace {

// parameter values the library rejects count as usage errors, like bad flags
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(cc_status st) {
    if (st == CC_OK)
        return;
    const std::string msg = std::string(cc_status_str(st)) + ": " + cc_last_error();
    if (st == CC_ERROR_ARGUMENT)
        throw UsageError(msg);
    throw std::runtime_error(msg);
}

struct ProfileFlags {
    double alpha = 1.0;
    double h = 0.1;
    double r0 = 0.5;
    double d0 = 0.25;
    std::string config;
};

void add_profile_flags(CLI::App& cmd, ProfileFlags& p) {
    cmd.add_option("--config", p.config, "key=value file with alpha, h, r0, d0");
    cmd.add_option("--alpha", p.alpha, "surface regularity exponent");
    cmd.add_option("--h", p.h, "gap height");
    cmd.add_option("--r0", p.r0, "cusp patch radius");
    cmd.add_option("--d0", p.d0, "safety clearance");
}

// file first, then explicit flags on top
ProfileFlags resolve_profile(const CLI::App& cmd, ProfileFlags p) {
    if (!p.config.empty()) {
        const double fa = p.alpha, fh = p.h, fr = p.r0, fd = p.d0;
        check(cc_profile_load(p.config.c_str(), &p.alpha, &p.h, &p.r0, &p.d0));
        if (cmd.count("--alpha"))
            p.alpha = fa;
        if (cmd.count("--h"))
            p.h = fh;
        if (cmd.count("--r0"))
            p.r0 = fr;
        if (cmd.count("--d0"))
            p.d0 = fd;
    }
    return p;
}

int component_code(const std::string& name) {
    if (name == "value")
        return CC_COMPONENT_VALUE;
    if (name == "grad")
        return CC_COMPONENT_GRADIENT;
    return CC_COMPONENT_DH;
}

cli::Json verdict_json(const cc_region_verdict& v, const std::string& mode,
                       const std::string& formula) {
    cli::Json json;
    json.add("mode", mode);
    json.add("admissible", v.admissible != 0);
    json.add("boundary", v.boundary != 0);
    json.add("alpha_bound", v.alpha_bound);
    json.add("binding", std::string(v.binding));
    std::vector<cli::Json> items;
    for (int i = 0; i < v.n_constraints; ++i) {
        cli::Json item;
        item.add("name", std::string(v.constraints[i].name));
        item.add("value", v.constraints[i].value);
        item.add("satisfied", v.constraints[i].satisfied != 0);
        items.push_back(item);
    }
    json.add_array("constraints", items);
    json.add("formula", formula);
    return json;
}

int cmd_verify_lemma(int argc, char** argv) {
    CLI::App app{"h-sweep of a gap norm plus scaling fit", "verify-lemma"};
    app.set_help_flag("--help", "print usage");
    double alpha = 1.0, q = 2.0, h_min = 1e-4, h_max = 1e-1, tol = 1e-7;
    int points = 7;
    std::string component = "grad", out_path;
    std::vector<double> h_list;
    app.add_option("--alpha", alpha, "surface regularity exponent")->required();
    app.add_option("--q", q, "Lebesgue exponent")->required();
    app.add_option("--h-min", h_min, "smallest gap height");
    app.add_option("--h-max", h_max, "largest gap height");
    app.add_option("--points", points, "geometric sweep length");
    app.add_option("--h-list", h_list, "explicit gap heights")->delimiter(',');
    app.add_option("--component", component)->check(CLI::IsMember({"value", "grad", "dh"}));
    app.add_option("--tol", tol, "relative quadrature tolerance");
    app.add_option("--out", out_path, "write the CSV here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    if (h_list.empty()) {
        if (points < 2)
            throw UsageError("verify-lemma: need at least 2 points");
        for (int i = 0; i < points; ++i)
            h_list.push_back(h_max *
                             std::pow(h_min / h_max, static_cast<double>(i) / (points - 1)));
    }
    const int n = static_cast<int>(h_list.size());
    std::vector<double> norms(n), sorted(n);
    cc_scaling_fit fit;
    check(cc_lemma_sweep(alpha, q, component_code(component), h_list.data(), n, tol,
                         norms.data(), sorted.data(), &fit));

    cli::Sink sink(out_path);
    cli::Csv csv({"h", "norm"});
    for (int i = 0; i < n; ++i)
        csv.row({cli::num(sorted[i]), cli::num(norms[i])});
    csv.write(sink.stream());
    sink.finish();

    cli::Json summary;
    summary.add("alpha", alpha);
    summary.add("q", q);
    summary.add("component", component);
    summary.add("q_critical", fit.q_critical);
    summary.add("predicted_exponent", fit.predicted_exponent);
    summary.add("slope", fit.slope);
    summary.add("residual", fit.fit_residual);
    summary.add("verdict", fit.expected_bounded ? "bounded" : "blow-up");
    summary.add("pass", fit.pass != 0);
    summary.add("formula",
                component == "value"
                    ? "norm ~ h^-sigma, sigma = max(0, (alpha*q-(3+alpha))/(q*(1+alpha)))"
                    : "norm ~ h^-sigma, sigma = max(0, (q*(1+2*alpha)-(3+alpha))/(q*(1+alpha)))");
    std::cout << summary.str() << "\n";
    return fit.pass ? 0 : 1;
}

int cmd_norms(int argc, char** argv) {
    CLI::App app{"single L^q norm over the gap", "norms"};
    app.set_help_flag("--help", "print usage");
    ProfileFlags prof;
    double q = 2.0, tol = 1e-8;
    std::string component = "grad", out_path;
    add_profile_flags(app, prof);
    app.add_option("--q", q, "Lebesgue exponent")->required();
    app.add_option("--component", component)->check(CLI::IsMember({"value", "grad", "dh"}));
    app.add_option("--tol", tol, "relative quadrature tolerance");
    app.add_option("--out", out_path, "write the JSON here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    const ProfileFlags p = resolve_profile(app, prof);
    cc_field* field = nullptr;
    check(cc_field_create(p.alpha, p.h, p.r0, p.d0, CC_MODE_CUSP, &field));
    double norm = 0.0;
    const cc_status st = cc_lq_norm(field, component_code(component), q, tol, &norm);
    cc_field_destroy(field);
    check(st);

    double qg = 0.0, qv = 0.0;
    check(cc_critical_exponents(p.alpha, &qg, &qv));
    double sigma = 0.0;
    check(cc_predicted_exponent(p.alpha, q, component_code(component), &sigma));

    cli::Json json;
    json.add("alpha", p.alpha);
    json.add("h", p.h);
    json.add("r0", p.r0);
    json.add("q", q);
    json.add("component", component);
    json.add("norm", norm);
    json.add("q_critical", component == "value" ? qv : qg);
    json.add("predicted_exponent", sigma);
    json.add("formula", "(int |.|^q 2*pi*r dr dx3)^(1/q) over 0<x3<h+r^(1+alpha), r<r0");
    cli::Sink sink(out_path);
    sink.stream() << json.str() << "\n";
    sink.finish();
    return 0;
}

int cmd_region(int argc, char** argv) {
    CLI::App app{"admissibility verdict for one exponent tuple", "region"};
    app.set_help_flag("--help", "print usage");
    std::string mode, out_path;
    double p = 2.0, gamma = 3.0, alpha = 0.1, beta = 3.0;
    app.add_option("--mode", mode)->required()->check(CLI::IsMember({"full", "noconv", "heat"}));
    app.add_option("--p", p, "power-law exponent");
    app.add_option("--gamma", gamma, "adiabatic exponent");
    app.add_option("--alpha", alpha, "surface regularity")->required();
    app.add_option("--beta", beta, "conductivity growth exponent (heat mode)");
    app.add_option("--out", out_path, "write the JSON here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    cc_region_verdict v;
    std::string formula;
    if (mode == "full") {
        check(cc_region_full(p, gamma, alpha, &v));
        formula = "alpha < min{(3-p)/(2p-1), 3(4pg-3p-6g)/(pg+3p+6g)}";
    } else if (mode == "noconv") {
        check(cc_region_noconv(p, gamma, alpha, &v));
        formula = "alpha < min{(3-p)/(2p-1), 9(pg-p-g)/(2pg+3p+3g)}";
    } else {
        check(cc_region_heat(gamma, beta, alpha, &v));
        formula = "alpha < min{3(g-3)/(4g+3), 3(b-2)/(9b+2)}";
    }
    cli::Sink sink(out_path);
    sink.stream() << verdict_json(v, mode, formula).str() << "\n";
    sink.finish();
    return 0;
}

int cmd_sweep(int argc, char** argv) {
    CLI::App app{"grid sweep of an admissibility map", "sweep"};
    app.set_help_flag("--help", "print usage");
    std::string mode = "full", format = "csv", out_path;
    double p_min = 2.0, p_max = 2.99, gamma_min = 1.6, gamma_max = 10.0;
    double beta_min = 2.1, beta_max = 10.0;
    int resolution = 25;
    app.add_option("--mode", mode)->check(CLI::IsMember({"full", "noconv", "heat"}));
    app.add_option("--p-min", p_min);
    app.add_option("--p-max", p_max);
    app.add_option("--gamma-min", gamma_min);
    app.add_option("--gamma-max", gamma_max);
    app.add_option("--beta-min", beta_min);
    app.add_option("--beta-max", beta_max);
    app.add_option("--resolution", resolution);
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the table here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    int mode_code = CC_REGION_FULL;
    double first_lo = p_min, first_hi = p_max, second_lo = gamma_min, second_hi = gamma_max;
    std::vector<std::string> header{"p", "gamma", "alpha_bound", "binding"};
    if (mode == "noconv") {
        mode_code = CC_REGION_NOCONV;
    } else if (mode == "heat") {
        mode_code = CC_REGION_HEAT;
        first_lo = gamma_min;
        first_hi = gamma_max;
        second_lo = beta_min;
        second_hi = beta_max;
        header = {"gamma", "beta", "alpha_bound", "binding"};
    }
    cc_region_table* table = nullptr;
    check(cc_region_sweep(mode_code, first_lo, first_hi, second_lo, second_hi, resolution,
                          &table));

    cli::Sink sink(out_path);
    const int size = cc_region_table_size(table);
    if (format == "json") {
        std::vector<cli::Json> rows;
        for (int i = 0; i < size; ++i) {
            double a, b, bound;
            char binding[CC_NAME_LEN];
            check(cc_region_table_row(table, i, &a, &b, &bound, binding));
            cli::Json row;
            row.add(header[0], a).add(header[1], b).add("alpha_bound", bound);
            row.add("binding", std::string(binding));
            rows.push_back(row);
        }
        cli::Json json;
        json.add("mode", mode);
        json.add_array("rows", rows);
        sink.stream() << json.str() << "\n";
    } else {
        cli::Csv csv(header);
        for (int i = 0; i < size; ++i) {
            double a, b, bound;
            char binding[CC_NAME_LEN];
            check(cc_region_table_row(table, i, &a, &b, &bound, binding));
            csv.row({cli::num(a), cli::num(b), cli::num(bound), binding});
        }
        csv.write(sink.stream());
    }
    cc_region_table_destroy(table);
    sink.finish();
    return 0;
}

int cmd_stress_check(int argc, char** argv) {
    CLI::App app{"stress model property sampling", "stress-check"};
    app.set_help_flag("--help", "print usage");
    std::string model, out_path;
    double p = 2.0, delta0 = 0.5;
    int samples = 10000;
    std::uint64_t seed = 20240801;
    app.add_option("--model", model)->required()->check(CLI::IsMember({"power", "activated"}));
    app.add_option("--p", p, "power-law exponent");
    app.add_option("--delta0", delta0, "activation threshold");
    app.add_option("--samples", samples);
    app.add_option("--seed", seed);
    app.add_option("--out", out_path, "write the JSON here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    cc_stress_report report;
    const int code = model == "power" ? CC_STRESS_POWER_LAW : CC_STRESS_ACTIVATED_EULER;
    check(cc_stress_check(code, p, delta0, samples, seed, &report));

    cli::Json json;
    json.add("model", model);
    if (model == "power")
        json.add("p", p);
    else
        json.add("delta0", delta0);
    json.add("samples", report.samples);
    json.add("seed", static_cast<double>(seed));
    json.add("monotone_violations", report.monotone_violations);
    json.add("monotone_min", report.monotone_min);
    cli::Json envelope;
    envelope.add("p", report.envelope_p);
    envelope.add("c0", report.envelope_c0);
    envelope.add("c1", report.envelope_c1);
    envelope.add("delta", report.envelope_delta);
    json.add("envelope", envelope);
    json.add("growth_violations", report.growth_violations);
    json.add("growth_lower_margin", report.growth_lower_margin);
    json.add("growth_upper_margin", report.growth_upper_margin);
    json.add("pass", report.pass != 0);
    json.add("formula", "c0*|M|^p - delta <= S(M):M <= c1*|M|^p and [S(M)-S(N)]:(M-N) >= 0");
    cli::Sink sink(out_path);
    sink.stream() << json.str() << "\n";
    sink.finish();
    return report.pass ? 0 : 1;
}

int cmd_min_mass(int argc, char** argv) {
    CLI::App app{"smallest mass that closes the gap", "min-mass"};
    app.set_help_flag("--help", "print usage");
    double c0 = 0.0, fluid_energy = 0.0, v0_coeff = 0.0, omega0_coeff = 0.0, j0 = 0.0;
    double gamma = 3.0, p = 2.0;
    std::string out_path;
    app.add_option("--c0", c0, "estimate constant")->required();
    app.add_option("--fluid-energy", fluid_energy)->required();
    app.add_option("--v0-coeff", v0_coeff, "V0 = v0_coeff/sqrt(m)");
    app.add_option("--omega0-coeff", omega0_coeff, "omega0 = omega0_coeff/sqrt(m)");
    app.add_option("--j0", j0, "moment of inertia per unit mass");
    app.add_option("--gamma", gamma);
    app.add_option("--p", p);
    app.add_option("--out", out_path, "write the JSON here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    double mass = 0.0, e0 = 0.0, k = 0.0;
    char branch[CC_NAME_LEN];
    check(cc_min_mass(c0, fluid_energy, v0_coeff, omega0_coeff, j0, gamma, p, &mass, &e0, &k,
                      branch));
    cli::Json json;
    json.add("C0", c0);
    json.add("fluid_energy", fluid_energy);
    json.add("v0_coeff", v0_coeff);
    json.add("omega0_coeff", omega0_coeff);
    json.add("j0", j0);
    json.add("gamma", gamma);
    json.add("p", p);
    json.add("E0", e0);
    json.add("min_mass", mass);
    json.add("K_at_mass", k);
    json.add("branch", std::string(branch));
    json.add("formula", "smallest m with C0*max(m^-1/2, m^-3/2)*(1+E0^(1/2+1/gamma+1/p)) < 1");
    cli::Sink sink(out_path);
    sink.stream() << json.str() << "\n";
    sink.finish();
    return 0;
}

int cmd_fall(int argc, char** argv) {
    CLI::App app{"quasi-static settling trajectory", "fall"};
    app.set_help_flag("--help", "print usage");
    double m = 1.0, g = 1.0, c = 1.0, sigma = 0.5, h0 = 1.0;
    int stride = 1;
    std::string format = "csv", out_path;
    app.add_option("--m", m)->required();
    app.add_option("--g", g)->required();
    app.add_option("--c", c, "drag amplitude")->required();
    app.add_option("--sigma", sigma, "drag growth exponent")->required();
    app.add_option("--h0", h0, "initial height")->required();
    app.add_option("--stride", stride, "record every k-th step");
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the trajectory here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    cc_trajectory* traj = nullptr;
    check(cc_fall(m, g, c, sigma, h0, stride, &traj));
    const long size = cc_trajectory_size(traj);

    cli::Sink sink(out_path);
    if (format == "json") {
        std::vector<double> ts, hs;
        for (long i = 0; i < size; ++i) {
            double t, h;
            check(cc_trajectory_point(traj, i, &t, &h));
            ts.push_back(t);
            hs.push_back(h);
        }
        cli::Json json;
        json.add_array("t", ts);
        json.add_array("h", hs);
        double touch = 0.0;
        if (cc_trajectory_touchdown(traj, &touch))
            json.add("touchdown", touch);
        else
            json.add_null("touchdown");
        sink.stream() << json.str() << "\n";
    } else {
        cli::Csv csv({"t", "h"});
        for (long i = 0; i < size; ++i) {
            double t, h;
            check(cc_trajectory_point(traj, i, &t, &h));
            csv.row({cli::num(t), cli::num(h)});
        }
        csv.write(sink.stream());
    }
    sink.finish();

    cli::Json summary;
    double touch = 0.0;
    const bool touched = cc_trajectory_touchdown(traj, &touch) != 0;
    summary.add("sigma", sigma);
    summary.add("touched", touched);
    if (touched)
        summary.add("touchdown_time", touch);
    else
        summary.add_null("touchdown_time");
    summary.add("formula", "T = c*h0^(1-sigma)/(m*g*(1-sigma)) for sigma < 1");
    std::cout << summary.str() << "\n";
    cc_trajectory_destroy(traj);
    return 0;
}

int cmd_field_dump(int argc, char** argv) {
    CLI::App app{"sample the gap field on a grid", "field-dump"};
    app.set_help_flag("--help", "print usage");
    ProfileFlags prof;
    std::string mode = "cusp", out_path;
    int nr = 30, nx3 = 20;
    add_profile_flags(app, prof);
    app.add_option("--mode", mode)->check(CLI::IsMember({"cusp", "extended"}));
    app.add_option("--nr", nr, "radial samples");
    app.add_option("--nx3", nx3, "vertical samples");
    app.add_option("--out", out_path, "write the CSV here instead of stdout");
    CUSP_PARSE(app, argc, argv);

    if (nr < 2 || nx3 < 2)
        throw UsageError("field-dump: need at least a 2x2 grid");
    const ProfileFlags p = resolve_profile(app, prof);
    const int mode_code = mode == "extended" ? CC_MODE_EXTENDED : CC_MODE_CUSP;
    cc_field* field = nullptr;
    check(cc_field_create(p.alpha, p.h, p.r0, p.d0, mode_code, &field));

    cli::Csv csv({"r", "x3", "w_r", "w_3", "frobenius_grad", "div"});
    const double r_max = mode_code == CC_MODE_CUSP ? p.r0 : 2.4 * p.r0;
    for (int i = 0; i < nr; ++i) {
        const double r = r_max * i / (nr - 1);
        double top = 2.4 * p.r0;
        if (mode_code == CC_MODE_CUSP)
            check(cc_field_gap(field, r, &top));
        for (int j = 0; j < nx3; ++j) {
            const double x3 = top * j / (nx3 - 1);
            cc_field_sample s;
            check(cc_field_eval(field, r, x3, &s));
            csv.row({cli::num(r), cli::num(x3), cli::num(s.w_r), cli::num(s.w_3),
                     cli::num(s.frob_grad), cli::num(s.div)});
        }
    }
    cc_field_destroy(field);

    cli::Sink sink(out_path);
    csv.write(sink.stream());
    sink.finish();
    return 0;
}

void print_usage(std::ostream& out) {
    out << "usage: cuspcollide <subcommand> [flags]\n"
        << "subcommands:\n"
        << "  verify-lemma  h-sweep of a gap norm plus scaling fit\n"
        << "  norms         single L^q norm over the gap\n"
        << "  region        admissibility verdict for one exponent tuple\n"
        << "  sweep         grid sweep of an admissibility map\n"
        << "  stress-check  stress model property sampling\n"
        << "  min-mass      smallest mass that closes the gap\n"
        << "  fall          quasi-static settling trajectory\n"
        << "  field-dump    sample the gap field on a grid\n"
        << "run `cuspcollide <subcommand> --help` for flags\n";
}

} // namespace

int main(int argc, char** argv) {
    const std::map<std::string, std::function<int(int, char**)>> commands{
        {"verify-lemma", cmd_verify_lemma}, {"norms", cmd_norms},
        {"region", cmd_region},             {"sweep", cmd_sweep},
        {"stress-check", cmd_stress_check}, {"min-mass", cmd_min_mass},
        {"fall", cmd_fall},                 {"field-dump", cmd_field_dump},
    };

    if (argc < 2) {
        print_usage(std::cerr);
        return 2;
    }
    const std::string name = argv[1];
    if (name == "--help" || name == "help") {
        print_usage(std::cout);
        return 0;
    }
    const auto it = commands.find(name);
    if (it == commands.end()) {
        std::cerr << "unknown subcommand: " << name << "\n";
        print_usage(std::cerr);
        return 2;
    }

    try {
        return it->second(argc - 1, argv + 1);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
