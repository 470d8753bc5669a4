// Command-line front end: threshold queries, parameter-plane region scans,
// the order-2 aperture curve, and critical-aperture computation.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "magwedge/cache.hpp"
#include "magwedge/errors.hpp"
#include "magwedge/fiber.hpp"
#include "magwedge/neumann_ansatz.hpp"
#include "magwedge/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    double h = 2e-3;
    double L = 12.0;
    std::string out = "-";
    std::string cache_path = "magwedge_cache.json";
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs) {
    cmd->set_help_flag("--help", "Print help");  // frees --h for the grid step
    cmd->configurable();  // accept a [subcommand] section in --config files
    cmd->add_option("--h", o.h, "Fiber grid step")->capture_default_str();
    cmd->add_option("--L", o.L, "Fiber truncation margin")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path ('-' for stdout)")
        ->capture_default_str();
    cmd->add_option("--cache", o.cache_path, "Threshold cache file")
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs,
                    with_jobs ? "Worker threads for grid scans"
                              : "Worker threads (accepted; this subcommand is serial)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

magwedge::FiberConfig fiber_config(const CommonOpts& o) {
    magwedge::FiberConfig cfg;
    cfg.h = o.h;
    cfg.L = o.L;
    return cfg;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "magwedge: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    f << content;
    if (!f) {
        std::cerr << "magwedge: write to '" << path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

nlohmann::json threshold_json(const magwedge::ThresholdResult& r) {
    nlohmann::json j;
    j["model"] = r.model.kind == magwedge::FiberKind::RobinHalfLine ? "robin" : "delta";
    j["beta"] = r.model.beta;
    j["theta"] = r.theta;
    if (std::isnan(r.argmin_p))
        j["argmin_p"] = nullptr;
    else
        j["argmin_p"] = r.argmin_p;
    j["h"] = r.config.h;
    j["L"] = r.config.L;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state certificates for magnetic Laplacians on wedges"};
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Key-value config file mirroring the flags, one [subcommand] "
                   "section each; give before the subcommand");

    // ---- threshold ----
    CommonOpts th_opts;
    std::string th_model;
    double th_beta = 0.0;
    auto* th = app.add_subcommand("threshold", "Essential-spectrum threshold for one model");
    th->add_option("--model", th_model, "robin or delta")
        ->required()
        ->check(CLI::IsMember({"robin", "delta"}));
    th->add_option("--beta", th_beta, "Coupling strength")->required();
    add_common(th, th_opts, false);

    // ---- robin-region ----
    CommonOpts rr_opts;
    magwedge::RegionSpec rr_spec;
    rr_spec.phi_over_pi = {0.05, 0.95, 46};
    rr_spec.beta = {-0.5, 3.0, 36};
    auto* rr = app.add_subcommand("robin-region", "Existence scan for the Robin wedge");
    rr->add_option("--phi-min", rr_spec.phi_over_pi.lo, "phi/pi lower end")
        ->capture_default_str();
    rr->add_option("--phi-max", rr_spec.phi_over_pi.hi, "phi/pi upper end")
        ->capture_default_str();
    rr->add_option("--phi-count", rr_spec.phi_over_pi.count, "phi grid points")
        ->capture_default_str();
    rr->add_option("--beta-min", rr_spec.beta.lo, "beta lower end")->capture_default_str();
    rr->add_option("--beta-max", rr_spec.beta.hi, "beta upper end")->capture_default_str();
    rr->add_option("--beta-count", rr_spec.beta.count, "beta grid points")
        ->capture_default_str();
    add_common(rr, rr_opts, true);

    // ---- delta-region ----
    CommonOpts dr_opts;
    magwedge::RegionSpec dr_spec;
    dr_spec.phi_over_pi = {0.05, 0.95, 46};
    dr_spec.beta = {0.05, 5.0, 40};
    auto* dr = app.add_subcommand("delta-region", "Existence scan for the delta line");
    dr->add_option("--phi-min", dr_spec.phi_over_pi.lo, "phi/pi lower end")
        ->capture_default_str();
    dr->add_option("--phi-max", dr_spec.phi_over_pi.hi, "phi/pi upper end")
        ->capture_default_str();
    dr->add_option("--phi-count", dr_spec.phi_over_pi.count, "phi grid points")
        ->capture_default_str();
    dr->add_option("--beta-min", dr_spec.beta.lo, "beta lower end (must be > 0)")
        ->capture_default_str();
    dr->add_option("--beta-max", dr_spec.beta.hi, "beta upper end")->capture_default_str();
    dr->add_option("--beta-count", dr_spec.beta.count, "beta grid points")
        ->capture_default_str();
    add_common(dr, dr_opts, true);

    // ---- neumann-curve ----
    CommonOpts nc_opts;
    magwedge::AxisSpec nc_axis{0.30, 0.80, 201};
    auto* nc = app.add_subcommand("neumann-curve",
                                  "Order-2 functional value versus aperture");
    nc->add_option("--phi-min", nc_axis.lo, "phi/pi lower end")->capture_default_str();
    nc->add_option("--phi-max", nc_axis.hi, "phi/pi upper end")->capture_default_str();
    nc->add_option("--count", nc_axis.count, "number of samples")->capture_default_str();
    add_common(nc, nc_opts, false);

    // ---- critical ----
    CommonOpts cr_opts;
    int cr_n = 2;
    double cr_tol = 1e-3;
    int cr_grid = 160;
    auto* cr = app.add_subcommand("critical", "Order-N critical aperture");
    cr->add_option("--N", cr_n, "Ansatz order (1..6)")
        ->required()
        ->check(CLI::Range(1, 6));
    cr->add_option("--tol", cr_tol, "Bisection tolerance in units of pi")
        ->capture_default_str();
    cr->add_option("--grid", cr_grid, "Angular grid cells for the minimizer")
        ->capture_default_str();
    add_common(cr, cr_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (th->parsed()) {
            const magwedge::FiberModel model{th_model == "robin"
                                                 ? magwedge::FiberKind::RobinHalfLine
                                                 : magwedge::FiberKind::DeltaFullLine,
                                             th_beta};
            magwedge::ThresholdCache cache(th_opts.cache_path);
            const auto r = cache.get(model, fiber_config(th_opts));
            if (!cache.save())
                std::cerr << "magwedge: warning: could not write cache '"
                          << cache.path() << "'\n";
            return write_output(th_opts.out, threshold_json(r).dump(2) + "\n");
        }
        if (rr->parsed()) {
            magwedge::ThresholdCache cache(rr_opts.cache_path);
            const std::string csv = magwedge::robin_region_csv(
                rr_spec, fiber_config(rr_opts), cache, rr_opts.jobs);
            if (!cache.save())
                std::cerr << "magwedge: warning: could not write cache '"
                          << cache.path() << "'\n";
            return write_output(rr_opts.out, csv);
        }
        if (dr->parsed()) {
            magwedge::ThresholdCache cache(dr_opts.cache_path);
            const std::string csv = magwedge::delta_region_csv(
                dr_spec, fiber_config(dr_opts), cache, dr_opts.jobs);
            if (!cache.save())
                std::cerr << "magwedge: warning: could not write cache '"
                          << cache.path() << "'\n";
            return write_output(dr_opts.out, csv);
        }
        if (nc->parsed()) {
            magwedge::ThresholdCache cache(nc_opts.cache_path);
            const std::string csv =
                magwedge::neumann_curve_csv(nc_axis, fiber_config(nc_opts), cache);
            if (!cache.save())
                std::cerr << "magwedge: warning: could not write cache '"
                          << cache.path() << "'\n";
            return write_output(nc_opts.out, csv);
        }
        if (cr->parsed()) {
            magwedge::ThresholdCache cache(cr_opts.cache_path);
            const double theta_n =
                cache.get(magwedge::FiberModel{magwedge::FiberKind::RobinHalfLine, 0.0},
                          fiber_config(cr_opts))
                    .theta;
            if (!cache.save())
                std::cerr << "magwedge: warning: could not write cache '"
                          << cache.path() << "'\n";
            const double phi_star =
                magwedge::critical_aperture(cr_n, theta_n, cr_tol * M_PI, cr_grid);
            nlohmann::json j;
            j["N"] = cr_n;
            j["phi_star_over_pi"] = phi_star / M_PI;
            j["theta_n"] = theta_n;
            j["tol_over_pi"] = cr_tol;
            return write_output(cr_opts.out, j.dump(2) + "\n");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "magwedge: " << e.what() << "\n";
        return kExitUsage;
    } catch (const magwedge::NumericalError& e) {
        std::cerr << "magwedge: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "magwedge: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
