#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmsdisc/bounds.hpp"
#include "cmsdisc/chebyshev.hpp"
#include "cmsdisc/envelope.hpp"
#include "cmsdisc/io.hpp"
#include "cmsdisc/linalg.hpp"
#include "cmsdisc/measures.hpp"
#include "cmsdisc/wigner.hpp"

using json = nlohmann::ordered_json;
using namespace cmsdisc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

ChebKind parse_kind(const std::string& s) {
    if (s == "t") return ChebKind::First;
    if (s == "u") return ChebKind::Second;
    throw CLI::ValidationError("--kind", "must be 't' or 'u'");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << text;
}

void write_sidecar_config(const std::string& out_path, const json& config) {
    write_text(out_path + ".config.json", config.dump(2) + "\n");
    std::cerr << "config: " << config.dump() << "\n";
}

int cmd_envelope(const std::string& kind_s, int n0, int k0, const std::string& out) {
    const ChebKind kind = parse_kind(kind_s);
    const CmsEnvelope env = build_envelope(kind, n0, k0);

    // grid domination check over [-1-2/n0, 1+2/n0]
    const double margin = 2.0 / n0;
    bool ok = true;
    const int grid_n = 10000;
    for (int i = 0; i < grid_n; ++i) {
        const double x = -1.0 - margin + (2.0 + 2.0 * margin) * i / (grid_n - 1.0);
        const double pv = series_eval(env.P, x);
        const double qv = series_eval(env.Q, x);
        const double ind_closed = (x >= env.node()) ? 1.0 : 0.0;
        const double ind_open = (x > env.node()) ? 1.0 : 0.0;
        // outside [-1,1] the basis grows like cosh(deg * acosh|x|) and
        // amplifies coefficient rounding; widen the tolerance accordingly
        const double tol = 1e-8 * std::max(1.0, std::abs(cheb_eval(kind, env.P.degree(), x)));
        if (pv < ind_closed - tol || qv > ind_open + tol) ok = false;
    }

    json grid = json::array();
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 - margin + (2.0 + 2.0 * margin) * i / 200.0;
        grid.push_back({x, series_eval(env.P, x), series_eval(env.Q, x)});
    }
    json j;
    j["config"] = {{"subcommand", "envelope"}, {"kind", kind_s}, {"n0", n0}, {"k0", k0}};
    j["nodes"] = env.nodes;
    j["p"] = env.p;
    j["q"] = env.q;
    j["gauss_weights"] = env.gauss_weights;
    j["p0_minus_q0"] = env.p[0] - env.q[0];
    j["r_squared_integral"] = p0_minus_q0(env);
    j["envelope_ok"] = ok;
    j["grid"] = grid;
    write_text(out, j.dump(2) + "\n");
    std::cerr << "config: " << j["config"].dump() << "\n";
    return 0;
}

int cmd_bound(const std::string& measure_path, const std::string& kind_s, int n0,
              std::optional<double> x0_opt, double K, const std::string& out) {
    const ChebKind kind = parse_kind(kind_s);
    MeasureLoadResult loaded = load_measure(measure_path);
    if (loaded.weight_sum_warning)
        std::cerr << "warning: input weights in " << measure_path
                  << " deviate from 1 by more than 1e-6; normalized\n";
    DiscreteMeasure mu = loaded.measure.domain() == MeasureDomain::Circle
                             ? circle_to_interval(loaded.measure, 0.0)
                             : loaded.measure;

    const int m0 = (n0 + 1) / 2 + 1;
    const int order = std::max(n0, 2 * m0 - 2);
    const MomentKind mk = (kind == ChebKind::First) ? MomentKind::T : MomentKind::U;
    const MomentSequence eps = moments(mu, mk, order);

    std::vector<double> grid;
    if (x0_opt)
        grid.push_back(*x0_opt);
    else
        grid = default_x0_grid();

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "x0,true_discrepancy,et_bound,cms_exact_bound\n";
    for (double x0 : grid) {
        const double st = sigma_tail(kind, x0);
        const double dev = std::max(std::abs(tail(mu, x0) - st),
                                    std::abs(open_tail(mu, x0) - st));
        const double et = (kind == ChebKind::First)
                              ? et_interval_t(eps, n0, K).bound_value
                              : et_interval_u(eps, n0, x0, K).bound_value;
        const double cms = cms_bound_at(eps, kind, x0, n0).bound_value;
        csv << x0 << "," << dev << "," << et << "," << cms << "\n";
    }
    write_text(out, csv.str());
    write_sidecar_config(out, {{"subcommand", "bound"},
                               {"measure", measure_path},
                               {"kind", kind_s},
                               {"n0", n0},
                               {"x0", x0_opt ? json(*x0_opt) : json()},
                               {"k", K}});
    return 0;
}

int cmd_wigner(int N, int trials, const std::string& ensemble, double diag_var,
               std::uint64_t seed, bool with_variance, const std::string& out) {
    EnsembleConfig config;
    config.N = N;
    config.entry_model = parse_entry_model(ensemble);
    config.diag_variance = diag_var;
    config.seed = seed;

    const std::vector<double> grid = default_x0_grid();
    ExperimentResult res = counting_experiment(config, grid, trials);
    if (with_variance && trials >= 30)
        res.counts = variance_experiment(config, grid, trials);

    const int n_max = static_cast<int>(std::ceil(std::cbrt(static_cast<double>(N)))) + 1;
    res.u_moments = u_moment_experiment(config, n_max, trials);

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "x0,mean_count,expected_count,error,bound_term,variance\n";
    for (const auto& r : res.counts)
        csv << r.x0 << "," << r.mean_count << "," << r.expected_count << "," << r.error
            << "," << r.bound_term << "," << r.variance << "\n";
    write_text(out, csv.str());

    std::ostringstream ucsv;
    ucsv << std::setprecision(17);
    ucsv << "n,u_moment_mean,std_err\n";
    for (const auto& u : res.u_moments)
        ucsv << u.n << "," << u.mean << "," << u.std_err << "\n";
    write_text(out + ".umoments.csv", ucsv.str());

    write_sidecar_config(out, {{"subcommand", "wigner"},
                               {"n", N},
                               {"trials", trials},
                               {"ensemble", ensemble},
                               {"diag_variance", diag_var},
                               {"seed", seed},
                               {"variance", with_variance}});
    return 0;
}

int cmd_witness(int n0, const std::string& out) {
    const DiscreteMeasure mu = sharpness_witness(n0);
    save_measure(mu, out);

    const MomentSequence um = moments(mu, MomentKind::U, 2 * n0 + 1);
    const Discrepancy disc = true_discrepancy(mu, ChebKind::Second);
    const double x_star = mu.atoms().back().position;
    const double st = sigma_tail(ChebKind::Second, x_star);
    const double dev_star = std::max(std::abs(tail(mu, x_star) - st),
                                     std::abs(open_tail(mu, x_star) - st));
    json j;
    j["config"] = {{"subcommand", "witness"}, {"n0", n0}};
    json umoments = json::array();
    for (int n = 1; n <= um.n_max(); ++n) umoments.push_back(um.at(n).real());
    j["umoments"] = umoments;
    j["true_discrepancy"] = disc.value;
    j["discrepancy_x0"] = disc.x0;
    j["extreme_node"] = x_star;
    j["deviation_at_extreme_node"] = dev_star;
    j["rho_over_n0"] = rho(x_star, n0) / n0;
    write_text(out + ".report.json", j.dump(2) + "\n");
    std::cerr << "config: " << j["config"].dump() << "\n";
    return 0;
}

int cmd_calibrate(std::uint64_t corpus_seed, const std::string& out) {
    const std::vector<int> n0s{2, 4, 8, 16, 32, 64};
    const Calibration cal =
        calibrate_K(test_corpus(corpus_seed), circle_test_corpus(corpus_seed), n0s);
    json j;
    j["config"] = {{"subcommand", "calibrate"}, {"corpus_seed", corpus_seed}};
    j["k1"] = cal.k1;
    j["k2"] = cal.k2;
    j["k3"] = cal.k3;
    j["n0_list"] = n0s;
    write_text(out, j.dump(2) + "\n");
    std::cerr << "config: " << j["config"].dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev-Markov-Stieltjes discrepancy bounds and Wigner-law experiments"};
    app.require_subcommand(1);

    std::string kind = "t", out, measure_path, ensemble = "complex_gaussian";
    int n0 = 1, k0 = 1, N = 1, trials = 1;
    double K = 1.0, diag_var = 2.0;
    std::optional<double> x0_opt;
    std::uint64_t seed = 0;
    bool with_variance = false;

    auto* env = app.add_subcommand("envelope", "build a CMS envelope and dump it as JSON");
    env->add_option("--kind", kind, "t (arcsine) or u (semicircle)")
        ->check(CLI::IsMember({"t", "u"}));
    env->add_option("--n0", n0, "envelope order")->required()->check(CLI::Range(1, 64));
    env->add_option("--k0", k0, "node index, 1..n0")->required()->check(CLI::Range(1, 64));
    env->add_option("--out", out, "output JSON path")->required();

    auto* bnd = app.add_subcommand("bound", "discrepancy bounds for a measure file");
    bnd->add_option("--measure", measure_path, "measure CSV")->required();
    bnd->add_option("--kind", kind, "t or u")->check(CLI::IsMember({"t", "u"}));
    bnd->add_option("--n0", n0, "inequality order")->required()->check(CLI::Range(1, 64));
    double x0_val = 0.0;
    auto* x0_flag = bnd->add_option("--x0", x0_val, "single evaluation point");
    bnd->add_option("--K", K, "constant multiplier (default 1)");
    bnd->add_option("--out", out, "output CSV path")->required();

    auto* wig = app.add_subcommand("wigner", "Monte-Carlo eigenvalue counting experiment");
    wig->add_option("--N", N, "matrix dimension")->required()->check(CLI::Range(1, 1000));
    wig->add_option("--trials", trials, "number of trials")->required()->check(CLI::PositiveNumber);
    wig->add_option("--ensemble", ensemble, "entry model")
        ->check(CLI::IsMember({"complex_gaussian", "complex_rademacher", "real_gaussian",
                               "real_rademacher"}));
    wig->add_option("--diag-var", diag_var, "diagonal entry variance");
    wig->add_option("--seed", seed, "master seed (default 0)");
    wig->add_flag("--variance", with_variance, "report the 5/2-power variance reference");
    wig->add_option("--out", out, "output CSV path")->required();

    auto* wit = app.add_subcommand("witness", "emit the sharpness witness measure");
    wit->add_option("--n0", n0, "vanishing-moment order")->required()->check(CLI::Range(1, 64));
    wit->add_option("--out", out, "output measure CSV path")->required();

    auto* cal = app.add_subcommand("calibrate", "estimate empirical K constants");
    cal->add_option("--corpus-seed", seed, "corpus seed (default 0)");
    cal->add_option("--out", out, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    if (x0_flag->count() > 0) x0_opt = x0_val;

    try {
        if (env->parsed()) return cmd_envelope(kind, n0, k0, out);
        if (bnd->parsed()) return cmd_bound(measure_path, kind, n0, x0_opt, K, out);
        if (wig->parsed()) return cmd_wigner(N, trials, ensemble, diag_var, seed, with_variance, out);
        if (wit->parsed()) return cmd_witness(n0, out);
        if (cal->parsed()) return cmd_calibrate(seed, out);
    } catch (const IllConditionedError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NoConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
