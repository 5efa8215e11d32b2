// starcert: numerical starlikeness criteria on the unit disc.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "starcert/catalog.hpp"
#include "starcert/criteria.hpp"
#include "starcert/geometry.hpp"
#include "starcert/io.hpp"
#include "starcert/reproduction.hpp"
#include "starcert/scan.hpp"

namespace {

using namespace starcert;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decimal number or one of the named constants sqrt3+1, sqrt3-1, sqrt3.
double parse_param(const std::string& text) {
    if (text == "sqrt3+1") return kSqrt3 + 1.0;
    if (text == "sqrt3-1") return kSqrt3 - 1.0;
    if (text == "sqrt3") return kSqrt3;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw UsageError("not a number: '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_param(item));
    return out;
}

struct RunConfig {
    std::string fn;
    std::string coeffs_file;
    std::string criterion;
    std::string alpha, beta, gamma;
    std::string radii;
    std::optional<int> thetas;
    std::optional<int> refine;
    double r_max = kEvalRadius;
    double margin = CertifyOptions{}.margin;
    std::string out;
    /// Empty means the command's default (csv for sweep, json otherwise).
    std::string format;

    // scan
    std::string functional;
    std::string mode;
    // sweep
    std::optional<double> from, to, step;
    // geometry
    std::optional<double> rho, theta, center, radius, half_angle;

    ScanGrid grid() const {
        if (!(r_max > 0.0 && r_max <= kEvalRadius)) throw UsageError("--r-max must lie in (0, 0.999]");
        ScanGrid g = default_grid(r_max);
        if (!radii.empty()) g.radii = parse_list(radii);
        if (thetas) g.thetas_per_circle = *thetas;
        if (refine) g.refine_iters = *refine;
        try {
            g.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return g;
    }

    AnalyticFunction function() const {
        if (!coeffs_file.empty()) return from_series("coeffs_file", io::load_series(coeffs_file));
        if (fn.empty()) throw UsageError("--fn or --coeffs-file is required");
        try {
            return catalog_function(fn);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    double param_for(const std::string& name) const {
        const std::string& text = name == "alpha" ? alpha : name == "beta" ? beta : gamma;
        if (text.empty()) throw UsageError("--" + name + " is required");
        return parse_param(text);
    }

    CriterionId criterion_id() const {
        if (criterion.empty()) throw UsageError("--criterion is required");
        CriterionId c;
        try {
            c = parse_criterion(criterion);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (c.has_param()) c.param = param_for(c.param_name());
        try {
            c.validate();
        } catch (const ParameterOutOfRange& e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os) throw UsageError("cannot write " + cfg.out);
    os << text;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_catalog(const RunConfig& cfg) {
    const auto fns = catalog();
    if (cfg.format == "csv") {
        std::string s = "name,formula\n";
        for (const auto& f : fns) s += f.name() + ",\"" + f.formula() + "\"\n";
        emit(cfg, s);
    } else {
        json arr = json::array();
        for (const auto& f : fns) arr.push_back(io::catalog_entry(f));
        emit(cfg, arr.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
    if (cfg.functional.empty()) throw UsageError("--functional is required");
    Functional F;
    try {
        F = parse_functional(cfg.functional);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (F.kind == Functional::Kind::ArgShiftedConvex) F.param = cfg.param_for("alpha");
    if (F.kind == Functional::Kind::ArgBeta) F.param = cfg.param_for("beta");
    if (F.kind == Functional::Kind::ArgGamma) F.param = cfg.param_for("gamma");
    const bool re_kind = F.kind == Functional::Kind::ReStar || F.kind == Functional::Kind::ReConvex ||
                         F.kind == Functional::Kind::ReHalf;
    std::string mode = cfg.mode.empty() ? (re_kind ? "inf" : "sup") : cfg.mode;
    if (mode != "sup" && mode != "inf") throw UsageError("--mode must be sup or inf");
    const auto result = mode == "sup" ? scan_sup(cfg.function(), F, cfg.grid()) : scan_inf(cfg.function(), F, cfg.grid());
    json j = io::to_json(result);
    j["functional"] = F.name();
    j["mode"] = mode;
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
    const CriterionId c = cfg.criterion_id();
    CertifyOptions opts;
    opts.margin = cfg.margin;
    const AnalyticFunction f = cfg.function();
    const auto rep = certify(f, c, cfg.grid(), opts);
    json j = io::to_json(rep);
    j["function"] = f.name();
    emit(cfg, j.dump(2) + "\n");
    if (!rep.implication_consistent) {
        std::cerr << "implication violated: hypothesis holds but conclusion fails\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
    const CriterionId base = [&] {
        if (cfg.criterion.empty()) throw UsageError("--criterion is required");
        try {
            return parse_criterion(cfg.criterion);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (!base.has_param()) throw UsageError("sweep needs T1, T2 or T3");
    if (!cfg.from || !cfg.to || !cfg.step) throw UsageError("sweep needs --from, --to and --step");
    if (!(*cfg.step > 0.0) || !(*cfg.to > *cfg.from)) throw UsageError("invalid range");
    const int n = static_cast<int>(std::floor((*cfg.to - *cfg.from) / *cfg.step + 1e-9)) + 1;
    if (n < 2) throw UsageError("range must contain at least 2 points");

    std::vector<double> params;
    for (int i = 0; i < n; ++i) params.push_back(*cfg.from + i * *cfg.step);
    if (base.kind == CriterionId::Kind::T1 && *cfg.from <= 4.0 && 4.0 <= *cfg.to) {
        // the row where phi attains its maximum
        auto it = std::lower_bound(params.begin(), params.end(), 4.0 - 1e-9);
        if (it != params.end() && std::abs(*it - 4.0) <= 1e-9) *it = 4.0;
        else params.insert(it, 4.0);
    }

    json rows = json::array();
    std::string csv = "param,threshold,radius\n";
    for (double p : params) {
        CriterionId c{base.kind, p};
        double thr = 0.0, radius = 0.0;
        try {
            thr = threshold_of(c);
            radius = c.kind == CriterionId::Kind::T1   ? geometry::phi_alpha(p)
                     : c.kind == CriterionId::Kind::T2 ? geometry::psi_beta(p)
                                                       : geometry::rho_gamma(p);
        } catch (const ParameterOutOfRange& e) {
            throw UsageError(e.what());
        }
        csv += fmt17(p) + "," + fmt17(thr) + "," + fmt17(radius) + "\n";
        rows.push_back({{"param", p}, {"threshold", thr}, {"radius", radius}});
    }
    emit(cfg, cfg.format == "json" ? rows.dump(2) + "\n" : csv);
    return kExitOk;
}

int cmd_geometry(const RunConfig& cfg) {
    json j;
    const auto m = geometry::varphi_scalar_min();
    j["scalar_min"] = {{"argmin", m.argmin}, {"min", m.min}, {"numeric_argmin", m.numeric_argmin},
                       {"numeric_min", m.numeric_min}};
    const double amax = geometry::golden_section_min([](double a) { return -geometry::phi_alpha(a); }, 1.0, 100.0);
    j["phi_max"] = {{"alpha", amax}, {"value", geometry::phi_alpha(amax)}};
    j["psi_limit"] = {{"beta", -1e6}, {"value", geometry::psi_beta(-1e6)}};
    j["rho_limit"] = {{"gamma", 1e6}, {"value", geometry::rho_gamma(1e6)}};
    try {
        if (!cfg.alpha.empty()) {
            const double a = parse_param(cfg.alpha);
            j["phi"] = {{"alpha", a}, {"value", geometry::phi_alpha(a)}};
        }
        if (!cfg.beta.empty()) {
            const double b = parse_param(cfg.beta);
            j["psi"] = {{"beta", b}, {"value", geometry::psi_beta(b)}};
        }
        if (!cfg.gamma.empty()) {
            const double g = parse_param(cfg.gamma);
            j["rho"] = {{"gamma", g}, {"value", geometry::rho_gamma(g)}};
        }
        if (cfg.rho || cfg.theta) {
            if (!cfg.rho || !cfg.theta) throw UsageError("--rho and --theta go together");
            const auto w = geometry::lemma_a_witness(*cfg.rho, *cfg.theta);
            j["lemma_a"] = {{"z0", io::complex_to_json(w.z0)}, {"a", w.a},           {"k", w.k},
                            {"bound", w.bound},                  {"equality_gap", w.equality_gap}};
        }
        if (cfg.center || cfg.radius || cfg.half_angle) {
            if (!cfg.center || !cfg.radius || !cfg.half_angle)
                throw UsageError("--center, --radius and --half-angle go together");
            const geometry::Disc d{*cfg.center, *cfg.radius};
            const geometry::Sector s{*cfg.half_angle};
            j["disc_in_sector"] = {{"analytic", geometry::disc_in_sector(d, s)},
                                   {"sampled", geometry::disc_in_sector_sampled(d, s)}};
        }
    } catch (const ParameterOutOfRange& e) {
        throw UsageError(e.what());
    } catch (const DegenerateAngle& e) {
        throw UsageError(e.what());
    }
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_verify_paper(const RunConfig& cfg) {
    reproduction::SuiteConfig suite;
    suite.grid = cfg.grid();
    suite.options.margin = cfg.margin;
    const auto results = reproduction::run_all(suite);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        std::printf("[%s] %2d  %-52s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
        arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
    if (!cfg.out.empty()) emit(cfg, arr.dump(2) + "\n");
    return all ? kExitOk : 1;
}

void add_function_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--fn", cfg.fn, "catalog function name");
    sub->add_option("--coeffs-file", cfg.coeffs_file, "JSON array of [re, im] Taylor coefficients");
}

void add_param_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--alpha", cfg.alpha, "alpha (decimal, sqrt3+1, sqrt3-1)");
    sub->add_option("--beta", cfg.beta, "beta");
    sub->add_option("--gamma", cfg.gamma, "gamma");
}

void add_grid_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--radii", cfg.radii, "comma-separated ascending radii");
    sub->add_option("--thetas", cfg.thetas, "angles per circle");
    sub->add_option("--refine", cfg.refine, "golden-section iterations per circle");
    sub->add_option("--r-max", cfg.r_max, "largest radius");
    sub->add_option("--margin", cfg.margin, "strictness margin for '< threshold'");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"starcert: numerical starlikeness criteria on the unit disc"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in functions");
    add_output_options(catalog_cmd, cfg);

    auto* scan_cmd = app.add_subcommand("scan", "extremum of a functional over the disc");
    add_function_options(scan_cmd, cfg);
    add_param_options(scan_cmd, cfg);
    add_grid_options(scan_cmd, cfg);
    add_output_options(scan_cmd, cfg);
    scan_cmd->add_option("--functional", cfg.functional, "RE_STAR, ARG_GAMMA, ...");
    scan_cmd->add_option("--mode", cfg.mode, "sup or inf");

    auto* check_cmd = app.add_subcommand("check", "certify one criterion for one function");
    add_function_options(check_cmd, cfg);
    check_cmd->add_option("--criterion", cfg.criterion, "T1, T1_COR_LIMIT, ..., T3_COR_DEV1");
    add_param_options(check_cmd, cfg);
    add_grid_options(check_cmd, cfg);
    add_output_options(check_cmd, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "threshold and disc radius over a parameter range");
    sweep_cmd->add_option("--criterion", cfg.criterion, "T1, T2 or T3");
    sweep_cmd->add_option("--from", cfg.from, "first parameter value");
    sweep_cmd->add_option("--to", cfg.to, "last parameter value");
    sweep_cmd->add_option("--step", cfg.step, "parameter step");
    add_output_options(sweep_cmd, cfg);

    auto* geometry_cmd = app.add_subcommand("geometry", "scalar and disc-in-sector facts");
    add_param_options(geometry_cmd, cfg);
    geometry_cmd->add_option("--rho", cfg.rho, "boundary-touch family radius");
    geometry_cmd->add_option("--theta", cfg.theta, "boundary-touch angle");
    geometry_cmd->add_option("--center", cfg.center, "disc center");
    geometry_cmd->add_option("--radius", cfg.radius, "disc radius");
    geometry_cmd->add_option("--half-angle", cfg.half_angle, "sector half-angle");
    add_output_options(geometry_cmd, cfg);

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full reproduction suite");
    add_grid_options(verify_cmd, cfg);
    add_output_options(verify_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*catalog_cmd) return cmd_catalog(cfg);
        if (*scan_cmd) return cmd_scan(cfg);
        if (*check_cmd) return cmd_check(cfg);
        if (*sweep_cmd) return cmd_sweep(cfg);
        if (*geometry_cmd) return cmd_geometry(cfg);
        if (*verify_cmd) return cmd_verify_paper(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const starcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
