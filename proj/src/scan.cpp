#include "magwedge/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "magwedge/delta_line.hpp"
#include "magwedge/neumann_ansatz.hpp"
#include "magwedge/robin_wedge.hpp"

namespace magwedge {

double AxisSpec::value(int i) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * i / (count - 1);
}

void AxisSpec::validate(const char* name) const {
    if (count < 1)
        throw std::invalid_argument(std::string(name) + ": count must be >= 1");
    if (count > 1 && !(lo < hi))
        throw std::invalid_argument(std::string(name) + ": requires lo < hi");
}

namespace {

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void csv_header(std::ostringstream& out, const char* what, const RegionSpec& spec,
                const FiberConfig& cfg) {
    out << "# magwedge " << what << " schema=1\n";
    out << "# solver: h=" << num(cfg.h) << " L=" << num(cfg.L) << " p_bracket=["
        << num(cfg.p_min) << "," << num(cfg.p_max) << "] p_step=" << num(cfg.p_step)
        << " golden_tol=" << num(cfg.golden_tol) << "\n";
    out << "# grid: phi/pi in [" << num(spec.phi_over_pi.lo) << ","
        << num(spec.phi_over_pi.hi) << "] n=" << spec.phi_over_pi.count
        << "; beta in [" << num(spec.beta.lo) << "," << num(spec.beta.hi)
        << "] n=" << spec.beta.count << "\n";
}

// Evaluate f(i) for i in [0, n) on `jobs` threads; results land in order.
void parallel_for(int n, int jobs, const std::function<void(int)>& f) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, n); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// One cached threshold per beta column. Misses are solved in parallel (the
// solver is pure) and inserted into the cache serially afterwards.
std::vector<double> column_thresholds(FiberKind kind, const RegionSpec& spec,
                                      const FiberConfig& cfg, ThresholdCache& cache,
                                      int jobs) {
    const int nb = spec.beta.count;
    std::vector<double> theta(nb);
    std::vector<int> missing;
    for (int j = 0; j < nb; ++j) {
        const double beta = spec.beta.value(j);
        if (auto hit = cache.lookup(kind, beta, cfg.h, cfg.L))
            theta[j] = hit->theta;
        else
            missing.push_back(j);
    }
    std::vector<ThresholdResult> solved(missing.size());
    parallel_for(static_cast<int>(missing.size()), jobs, [&](int m) {
        const FiberModel model{kind, spec.beta.value(missing[m])};
        solved[m] = kind == FiberKind::DeltaFullLine
                        ? delta_threshold_origin(model.beta, cfg)
                        : threshold(model, cfg);
    });
    for (std::size_t m = 0; m < missing.size(); ++m) {
        const auto& r = solved[m];
        cache.store(ThresholdCache::Entry{kind, r.model.beta, cfg.h, cfg.L, r.theta,
                                          r.argmin_p});
        theta[missing[m]] = r.theta;
    }
    return theta;
}

}  // namespace

std::string robin_region_csv(const RegionSpec& spec, const FiberConfig& cfg,
                             ThresholdCache& cache, int jobs) {
    spec.phi_over_pi.validate("phi_over_pi");
    spec.beta.validate("beta");
    cfg.validate();
    if (!(spec.phi_over_pi.lo > 0.0) || !(spec.phi_over_pi.hi < 1.0))
        throw std::invalid_argument("robin_region: phi/pi grid must lie inside (0, 1)");

    const std::vector<double> theta =
        column_thresholds(FiberKind::RobinHalfLine, spec, cfg, cache, jobs);

    const int np = spec.phi_over_pi.count, nb = spec.beta.count;
    std::vector<RobinVerdict> cells(np * nb);
    parallel_for(np * nb, jobs, [&](int c) {
        const int i = c / nb, j = c % nb;
        cells[c] = robin_exists(spec.phi_over_pi.value(i) * M_PI, spec.beta.value(j),
                                theta[j]);
    });

    std::ostringstream out;
    csv_header(out, "robin-region", spec, cfg);
    out << "phi_over_pi,beta,theta,exists,p_min_value,argmin_x\n";
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nb; ++j) {
            const auto& v = cells[i * nb + j];
            out << num(spec.phi_over_pi.value(i)) << ',' << num(spec.beta.value(j))
                << ',' << num(theta[j]) << ',' << (v.exists ? 1 : 0) << ','
                << num(v.p_min) << ',' << num(v.x_star) << '\n';
        }
    return out.str();
}

std::string delta_region_csv(const RegionSpec& spec, const FiberConfig& cfg,
                             ThresholdCache& cache, int jobs) {
    spec.phi_over_pi.validate("phi_over_pi");
    spec.beta.validate("beta");
    cfg.validate();
    if (!(spec.phi_over_pi.lo > 0.0) || !(spec.phi_over_pi.hi < 1.0))
        throw std::invalid_argument("delta_region: phi/pi grid must lie inside (0, 1)");
    if (!(spec.beta.lo > 0.0))
        throw std::invalid_argument("delta_region: beta grid must be positive");

    const std::vector<double> theta =
        column_thresholds(FiberKind::DeltaFullLine, spec, cfg, cache, jobs);

    const int np = spec.phi_over_pi.count, nb = spec.beta.count;
    std::vector<DeltaVerdict> cells(np * nb);
    parallel_for(np * nb, jobs, [&](int c) {
        const int i = c / nb, j = c % nb;
        cells[c] = delta_exists(spec.phi_over_pi.value(i) * M_PI, spec.beta.value(j),
                                theta[j]);
    });

    std::ostringstream out;
    csv_header(out, "delta-region", spec, cfg);
    out << "phi_over_pi,beta,theta,exists,f_min,x_star,y_star\n";
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nb; ++j) {
            const auto& v = cells[i * nb + j];
            out << num(spec.phi_over_pi.value(i)) << ',' << num(spec.beta.value(j))
                << ',' << num(theta[j]) << ',' << (v.exists ? 1 : 0) << ','
                << num(v.f_min) << ',' << num(v.x_star) << ',' << num(v.y_star)
                << '\n';
        }
    return out.str();
}

std::string neumann_curve_csv(const AxisSpec& phi_over_pi, const FiberConfig& cfg,
                              ThresholdCache& cache) {
    phi_over_pi.validate("phi_over_pi");
    cfg.validate();
    if (!(phi_over_pi.lo > 0.0) || !(phi_over_pi.hi < 1.0))
        throw std::invalid_argument("neumann_curve: phi/pi grid must lie inside (0, 1)");

    const double theta_n =
        cache.get(FiberModel{FiberKind::RobinHalfLine, 0.0}, cfg).theta;

    std::ostringstream out;
    out << "# magwedge neumann-curve schema=1\n";
    out << "# solver: h=" << num(cfg.h) << " L=" << num(cfg.L)
        << " theta_n=" << num(theta_n) << "\n";
    out << "phi_over_pi,I_value\n";
    for (int i = 0; i < phi_over_pi.count; ++i) {
        const double p = phi_over_pi.value(i);
        out << num(p) << ',' << num(n2_functional_value(p * M_PI, theta_n)) << '\n';
    }
    return out.str();
}

}  // namespace magwedge
