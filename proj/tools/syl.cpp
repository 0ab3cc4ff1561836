// Command-line front end: cone-volume evaluation and sweeps, rigorous
// certificate verification, curvature/constant utilities, and a
// linearized-operator demo.  Emits CSV/JSON with shortest round-trip
// float formatting; exit codes: 0 success, 1 certificate failure,
// 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "syl/bray.hpp"
#include "syl/certify.hpp"
#include "syl/curvature.hpp"
#include "syl/errors.hpp"
#include "syl/periodic.hpp"
#include "syl/symmetric.hpp"

namespace {

struct run_config {
    int max_depth = 40;
    double quad_error = 1e-11;
    double bisection_tol = 1e-4;
    std::string output_path;
};

// Shortest round-trip decimal form: parsing it back reproduces the bits.
std::string num(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string num_list(const std::vector<double>& vals) {
    std::string out = "[";
    for (std::size_t i = 0; i < vals.size(); ++i) out += (i ? ", " : "") + num(vals[i]);
    return out + "]";
}

// Primary document output goes to --out when given, else stdout.
void emit(const run_config& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw syl::domain_error("cannot open output file: " + cfg.output_path);
    out << text;
}

int cmd_alpha(const run_config& cfg, double epsilon) {
    const syl::alpha_evaluation ev = syl::alpha(epsilon, cfg.quad_error);
    emit(cfg, "{\"alpha\": " + num(ev.alpha) + ", \"epsilon\": " + num(ev.epsilon) +
                  ", \"n_evals\": " + std::to_string(ev.n_evals) +
                  ", \"quad_error\": " + num(ev.quad_error) +
                  ", \"z_star\": " + num(ev.z_star) + "}\n");
    return 0;
}

int cmd_alpha_sweep(const run_config& cfg, double eps_min, double eps_max, int steps) {
    if (!(0.0 < eps_min && eps_min < eps_max && eps_max <= 1.0))
        throw syl::domain_error("alpha-sweep: need 0 < eps-min < eps-max <= 1");
    if (steps < 2) throw syl::domain_error("alpha-sweep: need at least 2 steps");
    std::string csv = "epsilon,alpha,z_star,quad_error\n";
    for (int i = 0; i < steps; ++i) {
        const double eps = eps_min + (eps_max - eps_min) * i / (steps - 1);
        const syl::alpha_evaluation ev = syl::alpha(eps, cfg.quad_error);
        csv += num(eps) + "," + num(ev.alpha) + "," + num(ev.z_star) + "," +
               num(ev.quad_error) + "\n";
    }
    emit(cfg, csv);
    return 0;
}

int cmd_epsilon0(const run_config& cfg) {
    const syl::epsilon_zero_bracket br = syl::epsilon0_bracket(cfg.bisection_tol);
    const double mid = 0.5 * (br.lo + br.hi);
    emit(cfg, "{\"bracket_hi\": " + num(br.hi) + ", \"bracket_lo\": " + num(br.lo) +
                  ", \"epsilon0\": " + num(mid) + "}\n");
    return 0;
}

int cmd_verify(const run_config& cfg, const std::string& lemma, bool all) {
    using verifier = std::function<syl::certificate(int)>;
    const std::vector<std::pair<std::string, verifier>> registry = {
        {"arcsin_cubic", [](int d) { return syl::verify_arcsin_cubic(0.8, d); }},
        {"I1_small", [](int d) { return syl::verify_I1_small(d); }},
        {"EFG", [](int d) { return syl::verify_EFG(d); }},
        {"sum_small", [](int d) { return syl::verify_sum_small(d); }},
        {"H_large", [](int d) { return syl::verify_H_large(d); }},
        {"theorem_eps_half", [](int d) { return syl::verify_theorem_eps_half(d); }},
    };
    std::vector<const std::pair<std::string, verifier>*> selected;
    if (all) {
        for (const auto& entry : registry) selected.push_back(&entry);
    } else {
        for (const auto& entry : registry)
            if (entry.first == lemma) selected.push_back(&entry);
        if (selected.empty()) {
            std::string known;
            for (const auto& entry : registry) known += (known.empty() ? "" : ", ") + entry.first;
            std::fprintf(stderr, "unknown lemma id '%s'; known ids: %s\n", lemma.c_str(),
                         known.c_str());
            return 2;
        }
    }

    bool all_pass = true;
    std::string doc = all ? "[\n" : "";
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const syl::certificate cert = selected[i]->second(cfg.max_depth);
        all_pass = all_pass && cert.passed();
        std::fprintf(stderr, "%-18s %s (depth %d, %zu cells, %zu children)\n",
                     cert.lemma_id.c_str(), cert.passed() ? "PASS" : "FAIL", cert.depth,
                     cert.cells.size(), cert.children.size());
        if (!cert.passed()) std::fprintf(stderr, "  failure: %s\n", cert.failure.c_str());
        doc += syl::to_json(cert);
        if (all && i + 1 < selected.size()) {
            doc.pop_back(); // newline
            doc += ",\n";
        }
    }
    if (all) doc += "]\n";
    emit(cfg, doc);
    return all_pass ? 0 : 1;
}

int cmd_curves(const run_config& cfg, double epsilon, int steps) {
    syl::detail::check_epsilon_open(epsilon);
    if (steps < 1) throw syl::domain_error("curves: need at least 1 step");
    std::string csv = "phi,I1,I2,H\n";
    for (int j = 1; j <= steps; ++j) {
        const double phi = static_cast<double>(j) / (steps + 1);
        const double z = syl::z_of_phi(phi);
        csv += num(phi) + "," + num(syl::I1(z, epsilon)) + "," + num(syl::I2(z, epsilon)) + "," +
               num(syl::i_sum_upper_bound(phi)) + "\n";
    }
    emit(cfg, csv);
    return 0;
}

int cmd_constants(const run_config& cfg, int n, int k) {
    emit(cfg, "{\"gamma_kn\": " + num(syl::gamma_kn(n, k)) + ", \"k\": " + std::to_string(k) +
                  ", \"lambda_k\": " + num(syl::lambda_k(n, k)) + ", \"n\": " + std::to_string(n) +
                  ", \"sigma_k_sphere\": " + num(syl::sigma_k_sphere(n, k)) + "}\n");
    return 0;
}

std::string curvature_report(const syl::curvature_point& p) {
    const Eigen::MatrixXd a = syl::schouten(p);
    const syl::spectrum spec = syl::relative_spectrum(a, p.g);
    std::vector<double> sigma;
    for (int k = 1; k <= p.n; ++k) sigma.push_back(syl::sigma_k(spec, k));
    return "{\"eigenvalues\": " + num_list(spec.values) + ", \"n\": " + std::to_string(p.n) +
           ", \"sigma_k\": " + num_list(sigma) + "}\n";
}

int cmd_curvature(const run_config& cfg, int unit_sphere, const std::string& input) {
    if ((unit_sphere > 0) == !input.empty())
        throw syl::domain_error("curvature: pass exactly one of --unit-sphere or --input");
    if (unit_sphere > 0) {
        emit(cfg, curvature_report(syl::unit_sphere_point(unit_sphere)));
        return 0;
    }
    std::ifstream in(input);
    if (!in) throw syl::domain_error("cannot open input file: " + input);
    const nlohmann::json doc = nlohmann::json::parse(in);
    const auto& gj = doc.at("g");
    const auto& rj = doc.at("ric");
    const int n = static_cast<int>(gj.size());
    Eigen::MatrixXd g(n, n), ric(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            g(r, c) = gj.at(r).at(c).get<double>();
            ric(r, c) = rj.at(r).at(c).get<double>();
        }
    emit(cfg, curvature_report({g, ric, doc.at("R").get<double>()}));
    return 0;
}

int cmd_lambda_bound(const run_config& cfg, int chi, int tau) {
    const syl::four_d_bound b = syl::lambda_bound_4d(chi, tau);
    emit(cfg, "{\"bound\": " + num(b.bound) + ", \"chi\": " + std::to_string(chi) +
                  ", \"subcritical\": " + (b.subcritical ? "true" : "false") +
                  ", \"tau\": " + std::to_string(tau) + "}\n");
    return 0;
}

int cmd_linearized_demo(const run_config& cfg) {
    constexpr int n_pts = 256;
    const double spacing = 1.0 / n_pts;
    std::vector<double> f(n_pts);
    for (int j = 0; j < n_pts; ++j) {
        const double x = j * spacing;
        f[static_cast<std::size_t>(j)] = std::cos(2.0 * std::numbers::pi * x) +
                                         0.3 * std::sin(6.0 * std::numbers::pi * x) + 0.7;
    }
    const syl::periodic_field rhs({n_pts}, f, spacing);
    const syl::periodic_field h = syl::solve_linearized_periodic(rhs, 4, 2);
    const syl::periodic_field back = syl::apply_linearized(h, 4, 2);
    double residual = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        residual = std::max(residual, std::abs(back.values[i] - f[i]));
    emit(cfg, "{\"grid_points\": " + std::to_string(n_pts) +
                  ", \"residual\": " + num(residual) +
                  ", \"solution_mean\": " + num(h.mean()) + "}\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric-curvature toolkit: cone-volume evaluation, interval certificates, "
                 "and curvature utilities"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may appear after the subcommand
    app.set_config("--config", "", "Key=value file with default options (flags take precedence)");

    run_config cfg;
    app.add_option("--max-depth", cfg.max_depth, "Certificate refinement depth limit")
        ->envname("SYL_MAX_DEPTH")
        ->transform(CLI::Bound(8, 60))
        ->capture_default_str();
    app.add_option("--quad-error", cfg.quad_error, "Quadrature tolerance for evaluations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--bisection-tol", cfg.bisection_tol, "Bracket width for threshold search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", cfg.output_path, "Write the document output to this file");

    int rc = 0;

    double eps = 0.5;
    auto* alpha_cmd = app.add_subcommand("alpha", "Evaluate the normalized cone volume");
    alpha_cmd->add_option("--eps,--epsilon", eps, "Cone parameter in (0, 1]")->required();
    alpha_cmd->callback([&] { rc = cmd_alpha(cfg, eps); });

    double eps_min = 0.05, eps_max = 0.95;
    int sweep_steps = 19;
    auto* sweep_cmd = app.add_subcommand("alpha-sweep", "CSV sweep of the volume curve");
    sweep_cmd->add_option("--eps-min", eps_min, "Lower end of the sweep")->capture_default_str();
    sweep_cmd->add_option("--eps-max", eps_max, "Upper end of the sweep")->capture_default_str();
    sweep_cmd->add_option("--steps", sweep_steps, "Number of rows")->capture_default_str();
    sweep_cmd->callback([&] { rc = cmd_alpha_sweep(cfg, eps_min, eps_max, sweep_steps); });

    auto* eps0_cmd =
        app.add_subcommand("epsilon0", "Bracket the threshold where the volume reaches one");
    eps0_cmd->callback([&] { rc = cmd_epsilon0(cfg); });

    std::string lemma;
    bool verify_all = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run interval certificates");
    auto* lemma_opt = verify_cmd->add_option("--lemma", lemma, "Certificate id to run");
    verify_cmd->add_flag("--all", verify_all, "Run every certificate")->excludes(lemma_opt);
    verify_cmd->callback([&] {
        if (!verify_all && lemma.empty())
            throw CLI::RequiredError("verify: one of --lemma or --all");
        rc = cmd_verify(cfg, lemma, verify_all);
    });

    double curve_eps = 0.5;
    int curve_steps = 64;
    auto* curves_cmd = app.add_subcommand("curves", "CSV of I1, I2, and the upper envelope");
    curves_cmd->add_option("--eps,--epsilon", curve_eps, "Cone parameter in (0, 1)")
        ->capture_default_str();
    curves_cmd->add_option("--steps", curve_steps, "Number of interior grid rows")
        ->capture_default_str();
    curves_cmd->callback([&] { rc = cmd_curves(cfg, curve_eps, curve_steps); });

    int cn = 4, ck = 2;
    auto* const_cmd = app.add_subcommand("constants", "Sphere normalization constants");
    const_cmd->add_option("--n", cn, "Dimension")->capture_default_str();
    const_cmd->add_option("--k", ck, "Symmetric-function order")->capture_default_str();
    const_cmd->callback([&] { rc = cmd_constants(cfg, cn, ck); });

    int sphere_n = 0;
    std::string input_path;
    auto* curv_cmd = app.add_subcommand("curvature", "Trace-adjusted tensor spectrum");
    curv_cmd->add_option("--unit-sphere", sphere_n, "Evaluate on the unit sphere S^n");
    curv_cmd->add_option("--input", input_path, "JSON file with fields g, ric, R");
    curv_cmd->callback([&] { rc = cmd_curvature(cfg, sphere_n, input_path); });

    int chi = 2, tau = 0;
    auto* lb_cmd = app.add_subcommand("lambda-bound-4d", "Four-dimensional topological bound");
    lb_cmd->add_option("--chi", chi, "Euler characteristic")->capture_default_str();
    lb_cmd->add_option("--tau", tau, "Signature")->capture_default_str();
    lb_cmd->callback([&] { rc = cmd_lambda_bound(cfg, chi, tau); });

    auto* demo_cmd =
        app.add_subcommand("linearized-demo", "Solve the linearized equation on a torus grid");
    demo_cmd->callback([&] { rc = cmd_linearized_demo(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const syl::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
